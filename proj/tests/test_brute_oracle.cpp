#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "stn/brute_oracle.hpp"
#include "stn/constraint.hpp"
#include "test_graphs.hpp"

namespace stn {
namespace {

using testing::V;

bool is_subtree_of(const Subtree& t, const WeightedGraph<ExactInt>& g) {
    if (t.vertices.empty() || t.edges.size() + 1 != t.vertices.size()) {
        return false;
    }
    std::set<VertexId> vs(t.vertices.begin(), t.vertices.end());
    if (vs.size() != t.vertices.size()) {
        return false;
    }
    // Union-find over the edge list: connected and acyclic.
    std::map<VertexId, VertexId> parent;
    for (VertexId v : vs) {
        parent[v] = v;
    }
    auto find = [&](VertexId x) {
        while (parent[x] != x) {
            x = parent[x];
        }
        return x;
    };
    for (auto [a, b] : t.edges) {
        if (!vs.contains(a) || !vs.contains(b) || !g.has_edge(a, b)) {
            return false;
        }
        VertexId ra = find(a);
        VertexId rb = find(b);
        if (ra == rb) {
            return false;
        }
        parent[ra] = rb;
    }
    return true;
}

TEST(EnumerateSubtrees, SmallCounts) {
    EXPECT_EQ(enumerate_subtrees(testing::path_graph(2)).size(), 3U);
    EXPECT_EQ(enumerate_subtrees(testing::cycle_graph(3)).size(), 9U);
    EXPECT_EQ(enumerate_subtrees(WeightedGraph<ExactInt>(1)).size(), 1U);
}

TEST(EnumerateSubtrees, YieldsValidDistinctSubtrees) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 40; ++i) {
        auto g = testing::random_unicyclic(rng);
        if (i % 3 == 0 && g.vertex_count() > 3) {
            // A chord gives the host a second cycle.
            auto vs = g.vertices();
            bool added = false;
            for (std::size_t a = 0; a < vs.size() && !added; ++a) {
                for (std::size_t b = a + 1; b < vs.size() && !added; ++b) {
                    if (!g.has_edge(vs[a], vs[b])) {
                        g.add_edge(vs[a], vs[b]);
                        added = true;
                    }
                }
            }
        }
        std::set<Subtree> seen;
        for_each_subtree<ExactInt>(g, [&](const Subtree& t) {
            EXPECT_TRUE(is_subtree_of(t, g));
            EXPECT_TRUE(seen.insert(t).second) << "duplicate subtree";
        });
        // Cross-check the count against subset enumeration over edge sets.
        const auto edges = g.edges();
        std::size_t count = g.vertex_count();
        for (std::uint64_t mask = 1; mask < (1ULL << edges.size()); ++mask) {
            Subtree t;
            std::set<VertexId> vs;
            for (std::size_t k = 0; k < edges.size(); ++k) {
                if (mask >> k & 1ULL) {
                    t.edges.push_back(make_edge_key(edges[k].u, edges[k].v));
                    vs.insert(edges[k].u);
                    vs.insert(edges[k].v);
                }
            }
            t.vertices.assign(vs.begin(), vs.end());
            count += is_subtree_of(t, g) ? 1 : 0;
        }
        EXPECT_EQ(seen.size(), count);
    }
}

TEST(EnumerateSubtrees, IsomorphismStable) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        auto g = testing::random_unicyclic(rng);
        std::vector<std::uint32_t> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0U);
        std::shuffle(perm.begin(), perm.end(), rng);
        WeightedGraph<ExactInt> h(g.vertex_count());
        for (VertexId v : g.vertices()) {
            h.set_vertex_weight(V(perm[v.value]), g.vertex_weight(v));
        }
        for (const auto& e : g.edges()) {
            h.add_edge(V(perm[e.u.value]), V(perm[e.v.value]), e.weight);
        }
        EXPECT_EQ(enumerate_subtrees(g).size(), enumerate_subtrees(h).size());
        EXPECT_EQ(brute_gf(g), brute_gf(h));
    }
}

TEST(EnumerateSubtrees, DeterministicOrder) {
    auto g = testing::cycle_graph(5);
    EXPECT_EQ(enumerate_subtrees(g), enumerate_subtrees(g));
}

TEST(EnumerateSubtrees, CapIsEnforcedAndNamed) {
    auto g = testing::path_graph(21);
    try {
        enumerate_subtrees(g);
        FAIL() << "expected CapExceededError";
    } catch (const CapExceededError& e) {
        EXPECT_NE(std::string(e.what()).find("20"), std::string::npos);
    }
    EXPECT_EQ(enumerate_subtrees(g, 21).size(), 21U * 22U / 2U);
}

TEST(BruteGf, Examples) {
    auto c6 = testing::cycle_graph(6);
    EXPECT_EQ(brute_gf(c6), 36);
    EXPECT_EQ(brute_gf(c6, {V(0)}), 21);
    EXPECT_EQ(brute_gf(testing::path_graph(3)), 6);
}

TEST(BruteGf, WeightedProducts) {
    WeightedGraph<ExactInt> g(2);
    g.set_vertex_weight(V(0), 2);
    g.set_vertex_weight(V(1), 3);
    g.add_edge(V(0), V(1), 5);
    EXPECT_EQ(brute_gf(g), 2 + 3 + 30);
    EXPECT_EQ(brute_gf(g, {}, {make_edge_key(V(1), V(0))}), 30);
}

TEST(BruteGf, RequiredElementsMustExist) {
    auto g = testing::path_graph(3);
    EXPECT_THROW(brute_gf(g, {V(7)}), PreconditionError);
    EXPECT_THROW(brute_gf(g, {}, {make_edge_key(V(0), V(2))}), PreconditionError);
}

TEST(BruteGf, ConstraintForms) {
    auto c6 = testing::cycle_graph(6);
    EXPECT_EQ(brute_gf(c6, ContainmentConstraint{PairConstraint{V(0), V(1)}}), 16);
    EXPECT_EQ(brute_gf(c6, ContainmentConstraint{PairConstraint{V(0), V(2)}}), 13);
    EXPECT_EQ(brute_gf(c6, ContainmentConstraint{PairConstraint{V(0), V(3)}}), 12);
    EXPECT_EQ(brute_gf(c6, ContainmentConstraint{PathConstraint{{V(0), V(1)}}}), 15);
    EXPECT_THROW(brute_gf(c6, ContainmentConstraint{PathConstraint{{V(0), V(2)}}}), PreconditionError);
}

}  // namespace
}  // namespace stn
