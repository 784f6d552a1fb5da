#pragma once

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "stn/brute_oracle.hpp"
#include "stn/weighted_graph.hpp"

namespace stn {

struct NoConstraint {};

struct VertexConstraint {
    VertexId vertex;
};

/// Every vertex and edge of a simple path.
struct PathConstraint {
    std::vector<VertexId> path;
};

struct PairConstraint {
    VertexId first;
    VertexId second;
};

/// Which subtrees a generating function sums over.
using ContainmentConstraint = std::variant<NoConstraint, VertexConstraint, PathConstraint, PairConstraint>;

std::string describe(const ContainmentConstraint& c);

/// Oracle value of the constrained generating function, via brute_gf.
template <CommutativeRing R>
R brute_gf(const WeightedGraph<R>& g, const ContainmentConstraint& c,
           std::size_t vertex_cap = kDefaultBruteVertexCap);

}  // namespace stn
