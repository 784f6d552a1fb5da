#pragma once

#include <functional>
#include <span>
#include <vector>

#include "stn/weighted_graph.hpp"

namespace stn {

enum class GraphClass { Tree, Unicyclic, Other };

const char* to_string(GraphClass c);

/// Tree iff |E| = |V|-1, unicyclic iff |E| = |V| (for a connected graph).
/// Throws PreconditionError on an empty or disconnected graph.
template <CommutativeRing R>
GraphClass classify(const WeightedGraph<R>& g);

/// Removes leaf `u` and reweights its neighbour v to f(v)(1 + f(u)g(u,v)).
template <CommutativeRing R>
WeightedGraph<R> contract_leaf(const WeightedGraph<R>& g, VertexId u);

/// Merges the simple path `path` into its first vertex. The merged weight is
/// the product of all path vertex and edge weights; every other edge incident
/// to a path vertex is reattached to the merged vertex. Rejects contractions
/// that would create a loop or a parallel edge.
template <CommutativeRing R>
WeightedGraph<R> contract_path(const WeightedGraph<R>& g, std::span<const VertexId> path);

/// Contracts every pendant tree of a unicyclic graph onto its cycle vertex,
/// leaving just the weighted cycle.
template <CommutativeRing R>
WeightedGraph<R> contract_pendant_trees(const WeightedGraph<R>& g);

/// The cycle of a unicyclic graph in traversal order, starting at its
/// smallest id and continuing towards the smaller of that vertex's two cycle
/// neighbours.
template <CommutativeRing R>
std::vector<VertexId> cycle_order(const WeightedGraph<R>& g);

/// Throws unless `path` is a nonempty simple path of `g`.
template <CommutativeRing R>
void require_simple_path(const WeightedGraph<R>& g, std::span<const VertexId> path);

namespace detail {

/// In-place leaf stripping: repeatedly contracts leaves for which `keep`
/// is false until none remain (or one vertex is left). Returns the sum of
/// the contracted leaves' weights at the moment they were removed, i.e. the
/// generating-function mass of subtrees that lost contact with the rest.
template <CommutativeRing R>
R strip_leaves(WeightedGraph<R>& g, const std::function<bool(VertexId)>& keep);

/// Traversal order of a graph that is exactly one cycle (every vertex of
/// degree 2), with the same start/direction convention as cycle_order.
template <CommutativeRing R>
std::vector<VertexId> walk_cycle(const WeightedGraph<R>& cycle);

/// In-place single leaf contraction; returns f(u) before removal.
template <CommutativeRing R>
R contract_leaf_in_place(WeightedGraph<R>& g, VertexId u);

}  // namespace detail

}  // namespace stn
