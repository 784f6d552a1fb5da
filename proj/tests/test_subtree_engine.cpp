#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "stn/brute_oracle.hpp"
#include "stn/subtree_engine.hpp"
#include "test_graphs.hpp"

namespace stn {
namespace {

using testing::V;

std::vector<VertexId> P(std::initializer_list<std::uint32_t> ids) {
    std::vector<VertexId> out;
    for (auto i : ids) {
        out.push_back(V(i));
    }
    return out;
}

// Oracle-derived values (exhaustive enumeration) are frozen below.

TEST(TreeGf, Examples) {
    WeightedGraph<ExactInt> single(1);
    single.set_vertex_weight(V(0), 7);
    EXPECT_EQ(tree_gf(single), 7);
    EXPECT_EQ(tree_gf(testing::path_graph(3)), 6);
    EXPECT_EQ(tree_gf(testing::star_graph(3)), 11);
}

TEST(TreeGfRooted, Examples) {
    WeightedGraph<ExactInt> single(1);
    single.set_vertex_weight(V(0), 7);
    EXPECT_EQ(tree_gf_rooted(single, V(0)), 7);
    EXPECT_EQ(tree_gf_rooted(testing::path_graph(3), V(1)), 4);
    EXPECT_EQ(tree_gf_rooted(testing::star_graph(3), V(0)), 8);
}

TEST(TreeGfTwoVertices, Examples) {
    EXPECT_EQ(tree_gf_two_vertices(testing::path_graph(2), V(0), V(1)), 1);
    EXPECT_EQ(tree_gf_two_vertices(testing::star_graph(3), V(1), V(2)), 2);
    WeightedGraph<ExactInt> g(2);
    g.set_vertex_weight(V(0), 2);
    g.set_vertex_weight(V(1), 3);
    g.add_edge(V(0), V(1), 5);
    EXPECT_EQ(tree_gf_two_vertices(g, V(0), V(1)), 30);
}

TEST(TreeOps, Errors) {
    auto c = testing::cycle_graph(4);
    EXPECT_THROW(tree_gf(c), PreconditionError);
    EXPECT_THROW(tree_gf_rooted(testing::path_graph(3), V(9)), PreconditionError);
    EXPECT_THROW(tree_gf_two_vertices(testing::path_graph(3), V(1), V(1)), PreconditionError);
    EXPECT_THROW(tree_gf_path(testing::path_graph(3), P({0, 2})), PreconditionError);
}

TEST(UnicyclicGf, Examples) {
    EXPECT_EQ(unicyclic_gf(testing::cycle_graph(6)), 36);
    EXPECT_EQ(unicyclic_gf(testing::cycle_graph(3)), 9);
    EXPECT_EQ(unicyclic_gf(testing::cycle_graph(4)), 16);
}

TEST(UnicyclicGfRooted, Examples) {
    for (std::uint32_t v = 0; v < 6; ++v) {
        EXPECT_EQ(unicyclic_gf_rooted(testing::cycle_graph(6), V(v)), 21);
    }
    EXPECT_EQ(unicyclic_gf_rooted(testing::cycle_graph(3), V(1)), 6);
    EXPECT_EQ(unicyclic_gf_rooted(testing::cycle_graph(4), V(2)), 10);
}

TEST(UnicyclicGfPath, Examples) {
    auto c6 = testing::cycle_graph(6);
    EXPECT_EQ(unicyclic_gf_path(c6, P({0, 1})), 15);
    EXPECT_EQ(unicyclic_gf_path(c6, P({0, 1, 2, 3, 4, 5})), 1);
    // Exhaustive listing: the edge itself plus its two 2-edge extensions.
    EXPECT_EQ(unicyclic_gf_path(testing::cycle_graph(3), P({0, 1})), 3);
    EXPECT_EQ(brute_gf(testing::cycle_graph(3), {}, {make_edge_key(V(0), V(1))}), 3);
}

TEST(UnicyclicGfTwoVertices, HexagonConstants) {
    auto c6 = testing::cycle_graph(6);
    EXPECT_EQ(unicyclic_gf_two_vertices(c6, V(0), V(1)), 16);
    EXPECT_EQ(unicyclic_gf_two_vertices(c6, V(0), V(2)), 13);
    EXPECT_EQ(unicyclic_gf_two_vertices(c6, V(0), V(3)), 12);
    EXPECT_EQ(unicyclic_gf_two_vertices(c6, V(4), V(1)), 12);
}

TEST(UnicyclicOps, Errors) {
    EXPECT_THROW(unicyclic_gf(testing::path_graph(4)), PreconditionError);
    auto c = testing::cycle_graph(5);
    EXPECT_THROW(unicyclic_gf_rooted(c, V(5)), PreconditionError);
    EXPECT_THROW(unicyclic_gf_path(c, P({0, 2})), PreconditionError);
    EXPECT_THROW(unicyclic_gf_two_vertices(c, V(2), V(2)), PreconditionError);
    auto chord = testing::cycle_graph(6);
    chord.add_edge(V(0), V(3));
    EXPECT_THROW(subtree_gf(chord), PreconditionError);
}

TEST(CycleIdentity, RootedCountIsTriangular) {
    for (std::size_t m = 3; m <= 10; ++m) {
        auto c = testing::cycle_graph(m);
        const ExactInt expected(static_cast<unsigned long>(m * (m + 1) / 2));
        EXPECT_EQ(brute_gf(c, {V(0)}), expected) << "m=" << m;
        EXPECT_EQ(unicyclic_gf_rooted(c, V(0)), expected) << "m=" << m;
    }
}

TEST(CycleIdentity, HexagonRootedCountSplitsByIncidentEdges) {
    auto c6 = testing::cycle_graph(6);
    const VertexId c = V(0);
    const EdgeKey first = make_edge_key(V(0), V(1));
    const EdgeKey second = make_edge_key(V(5), V(0));
    const ExactInt both = brute_gf(c6, {c}, {first, second});
    const ExactInt with_first = brute_gf(c6, {c}, {first});
    const ExactInt with_second = brute_gf(c6, {c}, {second});
    const ExactInt all = brute_gf(c6, {c});
    const ExactInt first_only = with_first - both;
    const ExactInt second_only = with_second - both;
    const ExactInt neither = all - first_only - second_only - both;
    EXPECT_EQ(neither, 1);
    EXPECT_EQ(first_only, 5);
    EXPECT_EQ(second_only, 5);
    EXPECT_EQ(both, 10);
    EXPECT_EQ(all, 21);
}

template <class R>
void expect_engine_matches_oracle(const WeightedGraph<R>& g, std::mt19937_64& rng) {
    ASSERT_EQ(subtree_gf(g), brute_gf(g)) << "plain";
    const auto vs = g.vertices();
    for (VertexId v : vs) {
        ASSERT_EQ(subtree_gf(g, VertexConstraint{v}), brute_gf(g, {v})) << "vertex " << v.value;
    }
    for (std::size_t a = 0; a < vs.size(); ++a) {
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
            ASSERT_EQ(subtree_gf(g, PairConstraint{vs[a], vs[b]}), brute_gf(g, {vs[a], vs[b]}))
                << "pair " << vs[a].value << "," << vs[b].value;
        }
    }
    auto paths = testing::all_simple_paths(g);
    std::shuffle(paths.begin(), paths.end(), rng);
    paths.resize(std::min<std::size_t>(paths.size(), 40));
    for (const auto& p : paths) {
        std::set<EdgeKey> edges;
        for (std::size_t i = 1; i < p.size(); ++i) {
            edges.insert(make_edge_key(p[i - 1], p[i]));
        }
        ASSERT_EQ(subtree_gf(g, PathConstraint{p}), brute_gf(g, std::set<VertexId>(p.begin(), p.end()), edges))
            << "path of " << p.size() << " vertices";
    }
}

TEST(OracleEquivalence, RandomTrees) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 60; ++i) {
        auto t = testing::random_tree(rng, 1 + i % 12);
        expect_engine_matches_oracle(t, rng);
    }
}

TEST(OracleEquivalence, RandomUnicyclic) {
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 80; ++i) {
        auto u = testing::random_unicyclic(rng);
        expect_engine_matches_oracle(u, rng);
    }
}

TEST(OracleEquivalence, EveryPathOnBareCycles) {
    std::mt19937_64 rng(1);
    for (std::size_t m = 3; m <= 8; ++m) {
        auto c = testing::cycle_graph(m);
        testing::randomize_weights(c, rng);
        for (const auto& p : testing::all_simple_paths(c)) {
            std::set<EdgeKey> edges;
            for (std::size_t i = 1; i < p.size(); ++i) {
                edges.insert(make_edge_key(p[i - 1], p[i]));
            }
            ASSERT_EQ(unicyclic_gf_path(c, p), brute_gf(c, std::set<VertexId>(p.begin(), p.end()), edges));
        }
    }
}

TEST(OracleEquivalence, RationalWeights) {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> num(-4, 6);
    std::uniform_int_distribution<int> den(1, 5);
    for (int i = 0; i < 20; ++i) {
        auto base = testing::random_unicyclic(rng, 10);
        auto g = map_weights<ExactRational>(base, [&](const ExactInt&) {
            ExactRational q(num(rng), den(rng));
            q.canonicalize();
            return q;
        });
        expect_engine_matches_oracle(g, rng);
    }
}

TEST(ContainmentMonotonicity, ConstraintsNeverIncreaseUnitCounts) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 30; ++i) {
        auto g = testing::random_unicyclic(rng);
        g = map_weights<ExactInt>(g, [](const ExactInt&) { return ExactInt(1); });
        const auto vs = g.vertices();
        const ExactInt total = subtree_gf(g);
        for (VertexId v : vs) {
            const ExactInt rooted = subtree_gf(g, VertexConstraint{v});
            EXPECT_LE(rooted, total);
            for (VertexId w : g.neighbors(v)) {
                const ExactInt pair = subtree_gf(g, PairConstraint{v, w});
                EXPECT_LE(pair, rooted);
                EXPECT_LE(subtree_gf(g, PathConstraint{{v, w}}), pair);
            }
        }
    }
}

TEST(WeightSpecialization, UnitWeightsCountSubtrees) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 20; ++i) {
        auto g = map_weights<ExactInt>(testing::random_unicyclic(rng), [](const ExactInt&) { return ExactInt(1); });
        EXPECT_EQ(subtree_gf(g), ExactInt(static_cast<unsigned long>(enumerate_subtrees(g).size())));
    }
}

}  // namespace
}  // namespace stn
