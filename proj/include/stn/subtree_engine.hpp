#pragma once

#include <set>
#include <span>

#include "stn/constraint.hpp"
#include "stn/contraction.hpp"
#include "stn/weighted_graph.hpp"

namespace stn {

// Subtree generating functions F(G; f, g) = sum over nonempty subtrees T of
// prod_{v in T} f(v) * prod_{e in T} g(e), for weighted trees and unicyclic
// graphs, optionally restricted to subtrees containing a vertex, a path or a
// vertex pair. With unit weights every value is a plain subtree count.

// --- trees -----------------------------------------------------------------

/// Iterated leaf contraction: each removed leaf u contributes f(u), the last
/// surviving vertex contributes its accumulated weight.
template <CommutativeRing R>
R tree_gf(const WeightedGraph<R>& tree);

/// Subtrees containing `v`: contract every other leaf until only v is left.
template <CommutativeRing R>
R tree_gf_rooted(const WeightedGraph<R>& tree, VertexId v);

/// Subtrees containing both endpoints: product of the hanging rooted
/// generating functions along the v0-vl path times its edge weights.
template <CommutativeRing R>
R tree_gf_two_vertices(const WeightedGraph<R>& tree, VertexId v0, VertexId vl);

/// Subtrees containing every vertex (and so every edge) of a path.
template <CommutativeRing R>
R tree_gf_path(const WeightedGraph<R>& tree, std::span<const VertexId> path);

/// Subtrees containing all of `required` (nonempty): strip unrequired leaves
/// down to the spanning subtree of `required`, then multiply everything left.
template <CommutativeRing R>
R tree_gf_containing(const WeightedGraph<R>& tree, const std::set<VertexId>& required);

// --- unicyclic graphs ------------------------------------------------------

/// Pendant trees are folded into the cycle, then the cycle sum runs over
/// single vertices and every arc that omits at least one cycle edge.
template <CommutativeRing R>
R unicyclic_gf(const WeightedGraph<R>& graph);

template <CommutativeRing R>
R unicyclic_gf_rooted(const WeightedGraph<R>& graph, VertexId v);

/// Subtrees containing every vertex and edge of `path`. The path is
/// contracted into its first vertex; when it covers all but one or two cycle
/// edges the contraction would degenerate, so those cases are summed over the
/// admissible ways to break the cycle instead.
template <CommutativeRing R>
R unicyclic_gf_path(const WeightedGraph<R>& graph, std::span<const VertexId> path);

/// Sum over the (at most two) simple vi-vj paths of the path-constrained
/// function; a subtree contains exactly one of them.
template <CommutativeRing R>
R unicyclic_gf_two_vertices(const WeightedGraph<R>& graph, VertexId vi, VertexId vj);

// --- dispatch --------------------------------------------------------------

/// Classifies `graph` and evaluates the constrained generating function with
/// the tree or unicyclic engine. Other graph classes are rejected.
template <CommutativeRing R>
R subtree_gf(const WeightedGraph<R>& graph, const ContainmentConstraint& constraint = NoConstraint{});

}  // namespace stn
