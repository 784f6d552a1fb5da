#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "stn/weighted_graph.hpp"

namespace stn {

inline constexpr std::size_t kDefaultBruteVertexCap = 20;

/// An undirected edge with endpoints ordered (first < second).
using EdgeKey = std::pair<VertexId, VertexId>;

inline EdgeKey make_edge_key(VertexId a, VertexId b) {
    return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

/// A nonempty subtree of a host graph, as sorted vertex and edge lists.
struct Subtree {
    std::vector<VertexId> vertices;
    std::vector<EdgeKey> edges;

    friend auto operator<=>(const Subtree&, const Subtree&) = default;
};

/// Calls `visit` once per nonempty subtree of `g` (single vertices included).
/// Each subtree is grown from its smallest vertex id by a binary include /
/// exclude decision on frontier edges, so nothing is stored between items.
/// Throws CapExceededError when |V| exceeds `vertex_cap`.
template <CommutativeRing R>
void for_each_subtree(const WeightedGraph<R>& g, const std::function<void(const Subtree&)>& visit,
                      std::size_t vertex_cap = kDefaultBruteVertexCap);

template <CommutativeRing R>
std::vector<Subtree> enumerate_subtrees(const WeightedGraph<R>& g,
                                        std::size_t vertex_cap = kDefaultBruteVertexCap);

/// Sum of prod f(v) * prod g(e) over subtrees that contain every required
/// vertex and edge.
template <CommutativeRing R>
R brute_gf(const WeightedGraph<R>& g, const std::set<VertexId>& required_vertices = {},
           const std::set<EdgeKey>& required_edges = {},
           std::size_t vertex_cap = kDefaultBruteVertexCap);

}  // namespace stn
