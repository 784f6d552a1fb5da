#include "stn/contraction.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace stn {

const char* to_string(GraphClass c) {
    switch (c) {
        case GraphClass::Tree:
            return "tree";
        case GraphClass::Unicyclic:
            return "unicyclic";
        case GraphClass::Other:
            return "other";
    }
    return "unknown";
}

template <CommutativeRing R>
GraphClass classify(const WeightedGraph<R>& g) {
    if (g.vertex_count() == 0) {
        throw PreconditionError("graph has no vertices");
    }
    if (!g.is_connected()) {
        throw PreconditionError("graph is not connected");
    }
    if (g.edge_count() + 1 == g.vertex_count()) {
        return GraphClass::Tree;
    }
    if (g.edge_count() == g.vertex_count()) {
        return GraphClass::Unicyclic;
    }
    return GraphClass::Other;
}

namespace detail {

template <CommutativeRing R>
R contract_leaf_in_place(WeightedGraph<R>& g, VertexId u) {
    if (!g.has_vertex(u)) {
        throw PreconditionError("no vertex " + to_string(u));
    }
    if (g.vertex_count() < 2) {
        throw PreconditionError("cannot contract the only vertex of a graph");
    }
    if (g.degree(u) != 1) {
        throw PreconditionError("vertex " + to_string(u) + " is not a leaf");
    }
    VertexId v = g.neighbors(u).front();
    R fu = g.vertex_weight(u);
    R fv = g.vertex_weight(v) * (ring_one<R>() + fu * g.edge_weight(u, v));
    g.set_vertex_weight(v, std::move(fv));
    g.remove_vertex(u);
    return fu;
}

template <CommutativeRing R>
R strip_leaves(WeightedGraph<R>& g, const std::function<bool(VertexId)>& keep) {
    R removed = ring_zero<R>();
    std::deque<VertexId> queue;
    for (VertexId v : g.vertices()) {
        if (g.degree(v) == 1 && !keep(v)) {
            queue.push_back(v);
        }
    }
    while (!queue.empty() && g.vertex_count() > 1) {
        VertexId u = queue.front();
        queue.pop_front();
        if (!g.has_vertex(u) || g.degree(u) != 1) {
            continue;
        }
        VertexId v = g.neighbors(u).front();
        removed += contract_leaf_in_place(g, u);
        if (g.degree(v) == 1 && !keep(v)) {
            queue.push_back(v);
        }
    }
    return removed;
}

}  // namespace detail

template <CommutativeRing R>
WeightedGraph<R> contract_leaf(const WeightedGraph<R>& g, VertexId u) {
    WeightedGraph<R> out = g;
    detail::contract_leaf_in_place(out, u);
    return out;
}

template <CommutativeRing R>
void require_simple_path(const WeightedGraph<R>& g, std::span<const VertexId> path) {
    if (path.empty()) {
        throw PreconditionError("path is empty");
    }
    std::set<VertexId> seen;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (!g.has_vertex(path[i])) {
            throw PreconditionError("path vertex " + to_string(path[i]) + " is not in the graph");
        }
        if (!seen.insert(path[i]).second) {
            throw PreconditionError("path repeats vertex " + to_string(path[i]));
        }
        if (i > 0 && !g.has_edge(path[i - 1], path[i])) {
            throw PreconditionError("path uses missing edge " + to_string(path[i - 1]) + "-" +
                                    to_string(path[i]));
        }
    }
}

template <CommutativeRing R>
WeightedGraph<R> contract_path(const WeightedGraph<R>& g, std::span<const VertexId> path) {
    require_simple_path(g, path);
    const std::set<VertexId> on_path(path.begin(), path.end());
    const VertexId head = path.front();

    R merged = g.vertex_weight(head);
    for (std::size_t i = 1; i < path.size(); ++i) {
        merged *= g.vertex_weight(path[i]);
        merged *= g.edge_weight(path[i - 1], path[i]);
    }

    // Edges that survive the contraction, re-targeted at the head.
    struct Reattached {
        VertexId from;
        VertexId to;
    };
    std::vector<Reattached> moved;
    std::set<VertexId> head_neighbors;
    for (std::size_t i = 0; i < path.size(); ++i) {
        for (VertexId w : g.neighbors(path[i])) {
            bool path_edge = (i > 0 && w == path[i - 1]) || (i + 1 < path.size() && w == path[i + 1]);
            if (path_edge) {
                continue;
            }
            if (on_path.contains(w)) {
                throw PreconditionError("contracting the path would create a loop at " +
                                        to_string(head));
            }
            if (!head_neighbors.insert(w).second) {
                throw PreconditionError("contracting the path would create a parallel edge to " +
                                        to_string(w));
            }
            if (i > 0) {
                moved.push_back({path[i], w});
            }
        }
    }

    WeightedGraph<R> out = g;
    for (const auto& m : moved) {
        R weight = g.edge_weight(m.from, m.to);
        out.add_edge(head, m.to, std::move(weight));
    }
    for (std::size_t i = 1; i < path.size(); ++i) {
        out.remove_vertex(path[i]);
    }
    out.set_vertex_weight(head, std::move(merged));
    return out;
}

template <CommutativeRing R>
WeightedGraph<R> contract_pendant_trees(const WeightedGraph<R>& g) {
    if (classify(g) != GraphClass::Unicyclic) {
        throw PreconditionError("graph is not unicyclic");
    }
    WeightedGraph<R> out = g;
    detail::strip_leaves<R>(out, [](VertexId) { return false; });
    return out;
}

template <CommutativeRing R>
std::vector<VertexId> detail::walk_cycle(const WeightedGraph<R>& cycle) {
    std::vector<VertexId> order;
    order.reserve(cycle.vertex_count());
    VertexId start = cycle.vertices().front();
    VertexId prev = start;
    VertexId cur = cycle.neighbors(start).front();
    order.push_back(start);
    while (cur != start) {
        auto nb = cycle.neighbors(cur);
        if (nb.size() != 2 || order.size() > cycle.vertex_count()) {
            throw InternalError("walk_cycle: graph is not a single cycle");
        }
        order.push_back(cur);
        VertexId next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    return order;
}

template <CommutativeRing R>
std::vector<VertexId> cycle_order(const WeightedGraph<R>& g) {
    if (classify(g) != GraphClass::Unicyclic) {
        throw PreconditionError("graph is not unicyclic");
    }
    WeightedGraph<R> cycle = g;
    detail::strip_leaves<R>(cycle, [](VertexId) { return false; });
    return detail::walk_cycle(cycle);
}

#define STN_INSTANTIATE_CONTRACTION(R)                                                          \
    template GraphClass classify<R>(const WeightedGraph<R>&);                                   \
    template WeightedGraph<R> contract_leaf<R>(const WeightedGraph<R>&, VertexId);              \
    template WeightedGraph<R> contract_path<R>(const WeightedGraph<R>&, std::span<const VertexId>); \
    template WeightedGraph<R> contract_pendant_trees<R>(const WeightedGraph<R>&);               \
    template std::vector<VertexId> cycle_order<R>(const WeightedGraph<R>&);                     \
    template void require_simple_path<R>(const WeightedGraph<R>&, std::span<const VertexId>);   \
    template R detail::strip_leaves<R>(WeightedGraph<R>&, const std::function<bool(VertexId)>&); \
    template R detail::contract_leaf_in_place<R>(WeightedGraph<R>&, VertexId);                  \
    template std::vector<VertexId> detail::walk_cycle<R>(const WeightedGraph<R>&);

STN_INSTANTIATE_CONTRACTION(ExactInt)
STN_INSTANTIATE_CONTRACTION(ExactRational)

#undef STN_INSTANTIATE_CONTRACTION

}  // namespace stn
