#pragma once

#include <iosfwd>
#include <string>

#include "stn/weighted_graph.hpp"

namespace stn {

// Text format:
//   n m
//   u v [g]        (m lines, 0-based endpoints, optional edge weight)
//   vw u [f]       (optional vertex-weight lines)
// Weights are decimal integers or a/b rationals; omitted weights are 1.
// Blank lines and lines starting with '#' are ignored.

WeightedGraph<ExactRational> read_graph(std::istream& in);
WeightedGraph<ExactRational> read_graph_file(const std::string& path);

/// Writes live vertices renumbered densely in id order; weights equal to one
/// are omitted.
template <CommutativeRing R>
void write_graph(std::ostream& out, const WeightedGraph<R>& g);

}  // namespace stn
