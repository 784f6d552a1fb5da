#include "stn/subtree_engine.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace stn {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

template <CommutativeRing R>
void require_class(const WeightedGraph<R>& g, GraphClass expected) {
    GraphClass actual = classify(g);
    if (actual != expected) {
        throw PreconditionError(std::string("expected a ") + to_string(expected) + " graph, got " +
                                to_string(actual));
    }
}

template <CommutativeRing R>
void require_vertex(const WeightedGraph<R>& g, VertexId v) {
    if (!g.has_vertex(v)) {
        throw PreconditionError("vertex " + to_string(v) + " is not in the graph");
    }
}

/// A weighted cycle c_0 .. c_{m-1}; edge[i] joins c_i and c_{i+1 mod m}.
template <CommutativeRing R>
struct WeightedCycle {
    std::vector<VertexId> order;
    std::vector<R> vertex;
    std::vector<R> edge;

    std::size_t size() const { return order.size(); }
};

template <CommutativeRing R>
WeightedCycle<R> read_cycle(const WeightedGraph<R>& cycle_only) {
    WeightedCycle<R> c;
    c.order = detail::walk_cycle(cycle_only);
    const std::size_t m = c.order.size();
    for (std::size_t i = 0; i < m; ++i) {
        c.vertex.push_back(cycle_only.vertex_weight(c.order[i]));
        c.edge.push_back(cycle_only.edge_weight(c.order[i], c.order[(i + 1) % m]));
    }
    return c;
}

// Subtrees of a cycle are its single vertices and its arcs of 1..m-1 edges.
// An arc is identified by its start index s and edge count L, walking in
// increasing index order; each arc is visited exactly once.
template <CommutativeRing R>
void for_each_arc(const WeightedCycle<R>& c, const std::function<void(std::size_t, std::size_t, const R&)>& visit) {
    const std::size_t m = c.size();
    for (std::size_t s = 0; s < m; ++s) {
        R product = c.vertex[s];
        for (std::size_t len = 1; len < m; ++len) {
            product *= c.edge[(s + len - 1) % m];
            product *= c.vertex[(s + len) % m];
            visit(s, len, product);
        }
    }
}

template <CommutativeRing R>
R cycle_total(const WeightedCycle<R>& c) {
    R total = ring_zero<R>();
    for (const R& w : c.vertex) {
        total += w;
    }
    for_each_arc<R>(c, [&](std::size_t, std::size_t, const R& arc) { total += arc; });
    return total;
}

template <CommutativeRing R>
R cycle_rooted(const WeightedCycle<R>& c, std::size_t root) {
    const std::size_t m = c.size();
    R total = c.vertex[root];
    for_each_arc<R>(c, [&](std::size_t s, std::size_t len, const R& arc) {
        if ((root + m - s) % m <= len) {
            total += arc;
        }
    });
    return total;
}

template <CommutativeRing R>
std::size_t index_of(const WeightedCycle<R>& c, VertexId v) {
    auto it = std::find(c.order.begin(), c.order.end(), v);
    if (it == c.order.end()) {
        throw InternalError("vertex " + to_string(v) + " is not on the cycle");
    }
    return static_cast<std::size_t>(it - c.order.begin());
}

template <CommutativeRing R>
R product_of_all_weights(const WeightedGraph<R>& g) {
    R product = ring_one<R>();
    for (VertexId v : g.vertices()) {
        product *= g.vertex_weight(v);
    }
    for (const auto& e : g.edges()) {
        product *= e.weight;
    }
    return product;
}

template <CommutativeRing R>
void collect_simple_paths(const WeightedGraph<R>& g, VertexId target, std::vector<VertexId>& current,
                          std::vector<bool>& used, std::vector<std::vector<VertexId>>& out) {
    VertexId at = current.back();
    if (at == target) {
        out.push_back(current);
        return;
    }
    for (VertexId w : g.neighbors(at)) {
        if (used[w.value]) {
            continue;
        }
        used[w.value] = true;
        current.push_back(w);
        collect_simple_paths(g, target, current, used, out);
        current.pop_back();
        used[w.value] = false;
    }
}

}  // namespace

// --- trees -----------------------------------------------------------------

template <CommutativeRing R>
R tree_gf(const WeightedGraph<R>& tree) {
    require_class(tree, GraphClass::Tree);
    WeightedGraph<R> work = tree;
    R total = detail::strip_leaves<R>(work, [](VertexId) { return false; });
    if (work.vertex_count() != 1) {
        throw InternalError("tree_gf: leaf stripping did not reach a single vertex");
    }
    total += work.vertex_weight(work.vertices().front());
    return total;
}

template <CommutativeRing R>
R tree_gf_containing(const WeightedGraph<R>& tree, const std::set<VertexId>& required) {
    require_class(tree, GraphClass::Tree);
    if (required.empty()) {
        throw PreconditionError("containment set is empty");
    }
    for (VertexId v : required) {
        require_vertex(tree, v);
    }
    WeightedGraph<R> work = tree;
    detail::strip_leaves<R>(work, [&](VertexId v) { return required.contains(v); });
    return product_of_all_weights(work);
}

template <CommutativeRing R>
R tree_gf_rooted(const WeightedGraph<R>& tree, VertexId v) {
    return tree_gf_containing(tree, std::set<VertexId>{v});
}

template <CommutativeRing R>
R tree_gf_two_vertices(const WeightedGraph<R>& tree, VertexId v0, VertexId vl) {
    if (v0 == vl) {
        throw PreconditionError("two-vertex containment needs distinct vertices");
    }
    return tree_gf_containing(tree, std::set<VertexId>{v0, vl});
}

template <CommutativeRing R>
R tree_gf_path(const WeightedGraph<R>& tree, std::span<const VertexId> path) {
    require_class(tree, GraphClass::Tree);
    require_simple_path(tree, path);
    return tree_gf_containing(tree, std::set<VertexId>(path.begin(), path.end()));
}

// --- unicyclic graphs ------------------------------------------------------

template <CommutativeRing R>
R unicyclic_gf(const WeightedGraph<R>& graph) {
    require_class(graph, GraphClass::Unicyclic);
    WeightedGraph<R> work = graph;
    R detached = detail::strip_leaves<R>(work, [](VertexId) { return false; });
    return detached + cycle_total(read_cycle(work));
}

template <CommutativeRing R>
R unicyclic_gf_rooted(const WeightedGraph<R>& graph, VertexId v) {
    require_class(graph, GraphClass::Unicyclic);
    require_vertex(graph, v);
    WeightedGraph<R> work = graph;
    detail::strip_leaves<R>(work, [&](VertexId x) { return x == v; });
    if (work.degree(v) != 1) {
        WeightedCycle<R> c = read_cycle(work);
        return cycle_rooted(c, index_of(c, v));
    }

    // v hangs off the cycle by a tail v = t_0, t_1, ..., t_k, with t_k on the
    // cycle. F(v) = f(v)(1 + g(v, t_1) F(G - v; t_1)), unrolled along the tail.
    std::vector<VertexId> tail{v};
    VertexId prev = v;
    VertexId cur = work.neighbors(v).front();
    while (work.degree(cur) == 2) {
        tail.push_back(cur);
        auto nb = work.neighbors(cur);
        VertexId next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    const VertexId anchor = cur;
    std::vector<R> tail_vertex;
    std::vector<R> tail_edge;
    for (std::size_t i = 0; i < tail.size(); ++i) {
        tail_vertex.push_back(work.vertex_weight(tail[i]));
        VertexId toward = i + 1 < tail.size() ? tail[i + 1] : anchor;
        tail_edge.push_back(work.edge_weight(tail[i], toward));
    }
    for (VertexId t : tail) {
        work.remove_vertex(t);
    }
    WeightedCycle<R> c = read_cycle(work);
    R rooted = cycle_rooted(c, index_of(c, anchor));
    for (std::size_t i = tail.size(); i-- > 0;) {
        rooted = tail_vertex[i] * (ring_one<R>() + tail_edge[i] * rooted);
    }
    return rooted;
}

template <CommutativeRing R>
R unicyclic_gf_path(const WeightedGraph<R>& graph, std::span<const VertexId> path) {
    require_class(graph, GraphClass::Unicyclic);
    require_simple_path(graph, path);
    if (path.size() == 1) {
        return unicyclic_gf_rooted(graph, path.front());
    }

    const std::vector<VertexId> cycle = cycle_order(graph);
    const std::size_t m = cycle.size();
    const std::set<VertexId> on_cycle(cycle.begin(), cycle.end());
    const std::set<VertexId> on_path(path.begin(), path.end());
    std::size_t cycle_edges_used = 0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (on_cycle.contains(path[i - 1]) && on_cycle.contains(path[i])) {
            ++cycle_edges_used;
        }
    }

    if (cycle_edges_used + 3 <= m) {
        // The contracted graph keeps a cycle of length >= 3.
        WeightedGraph<R> contracted = contract_path(graph, path);
        return unicyclic_gf_rooted(contracted, path.front());
    }

    if (cycle_edges_used + 1 == m) {
        // One cycle edge is left and no subtree containing the path can use it.
        for (std::size_t i = 0; i < m; ++i) {
            VertexId a = cycle[i];
            VertexId b = cycle[(i + 1) % m];
            bool in_path = false;
            for (std::size_t j = 1; j < path.size(); ++j) {
                in_path = in_path || make_edge_key(path[j - 1], path[j]) == make_edge_key(a, b);
            }
            if (!in_path) {
                WeightedGraph<R> tree = graph;
                tree.remove_edge(a, b);
                return tree_gf_containing(tree, on_path);
            }
        }
        throw InternalError("unicyclic_gf_path: no free cycle edge found");
    }

    // cycle_edges_used == m - 2: a single cycle vertex x lies off the path,
    // between path vertices a and b. A subtree uses at most one of a-x, x-b.
    std::size_t xi = 0;
    while (on_path.contains(cycle[xi])) {
        ++xi;
    }
    const VertexId x = cycle[xi];
    const VertexId a = cycle[(xi + m - 1) % m];
    const VertexId b = cycle[(xi + 1) % m];

    WeightedGraph<R> without_xb = graph;
    without_xb.remove_edge(x, b);
    R total = tree_gf_containing(without_xb, on_path);

    WeightedGraph<R> without_ax = graph;
    without_ax.remove_edge(a, x);
    std::set<VertexId> with_x = on_path;
    with_x.insert(x);
    total += tree_gf_containing(without_ax, with_x);
    return total;
}

template <CommutativeRing R>
R unicyclic_gf_two_vertices(const WeightedGraph<R>& graph, VertexId vi, VertexId vj) {
    require_class(graph, GraphClass::Unicyclic);
    require_vertex(graph, vi);
    require_vertex(graph, vj);
    if (vi == vj) {
        throw PreconditionError("two-vertex containment needs distinct vertices");
    }
    std::vector<std::vector<VertexId>> paths;
    std::vector<VertexId> current{vi};
    std::vector<bool> used(graph.id_bound(), false);
    used[vi.value] = true;
    collect_simple_paths(graph, vj, current, used, paths);
    if (paths.empty() || paths.size() > 2) {
        throw InternalError("unicyclic graph must have one or two simple paths between two vertices");
    }
    R total = ring_zero<R>();
    for (const auto& p : paths) {
        total += unicyclic_gf_path(graph, std::span<const VertexId>(p));
    }
    return total;
}

// --- dispatch --------------------------------------------------------------

template <CommutativeRing R>
R subtree_gf(const WeightedGraph<R>& graph, const ContainmentConstraint& constraint) {
    const GraphClass cls = classify(graph);
    if (cls == GraphClass::Other) {
        throw PreconditionError("unsupported graph class: other (neither tree nor unicyclic)");
    }
    const bool tree = cls == GraphClass::Tree;
    return std::visit(
        Overloaded{
            [&](const NoConstraint&) { return tree ? tree_gf(graph) : unicyclic_gf(graph); },
            [&](const VertexConstraint& c) {
                return tree ? tree_gf_rooted(graph, c.vertex) : unicyclic_gf_rooted(graph, c.vertex);
            },
            [&](const PathConstraint& c) {
                std::span<const VertexId> p(c.path);
                return tree ? tree_gf_path(graph, p) : unicyclic_gf_path(graph, p);
            },
            [&](const PairConstraint& c) {
                return tree ? tree_gf_two_vertices(graph, c.first, c.second)
                            : unicyclic_gf_two_vertices(graph, c.first, c.second);
            },
        },
        constraint);
}

#define STN_INSTANTIATE_ENGINE(R)                                                                   \
    template R tree_gf<R>(const WeightedGraph<R>&);                                                 \
    template R tree_gf_rooted<R>(const WeightedGraph<R>&, VertexId);                                \
    template R tree_gf_two_vertices<R>(const WeightedGraph<R>&, VertexId, VertexId);                \
    template R tree_gf_path<R>(const WeightedGraph<R>&, std::span<const VertexId>);                 \
    template R tree_gf_containing<R>(const WeightedGraph<R>&, const std::set<VertexId>&);           \
    template R unicyclic_gf<R>(const WeightedGraph<R>&);                                            \
    template R unicyclic_gf_rooted<R>(const WeightedGraph<R>&, VertexId);                           \
    template R unicyclic_gf_path<R>(const WeightedGraph<R>&, std::span<const VertexId>);            \
    template R unicyclic_gf_two_vertices<R>(const WeightedGraph<R>&, VertexId, VertexId);           \
    template R subtree_gf<R>(const WeightedGraph<R>&, const ContainmentConstraint&);

STN_INSTANTIATE_ENGINE(ExactInt)
STN_INSTANTIATE_ENGINE(ExactRational)

#undef STN_INSTANTIATE_ENGINE

}  // namespace stn
