#include "stn/constraint.hpp"

#include "stn/contraction.hpp"

namespace stn {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

std::string describe(const ContainmentConstraint& c) {
    return std::visit(
        Overloaded{
            [](const NoConstraint&) { return std::string("none"); },
            [](const VertexConstraint& v) { return "vertex " + to_string(v.vertex); },
            [](const PathConstraint& p) {
                std::string s = "path ";
                for (std::size_t i = 0; i < p.path.size(); ++i) {
                    s += (i ? "," : "") + to_string(p.path[i]);
                }
                return s;
            },
            [](const PairConstraint& p) { return "pair " + to_string(p.first) + "," + to_string(p.second); },
        },
        c);
}

template <CommutativeRing R>
R brute_gf(const WeightedGraph<R>& g, const ContainmentConstraint& c, std::size_t vertex_cap) {
    std::set<VertexId> vertices;
    std::set<EdgeKey> edges;
    std::visit(Overloaded{
                   [](const NoConstraint&) {},
                   [&](const VertexConstraint& v) { vertices.insert(v.vertex); },
                   [&](const PathConstraint& p) {
                       require_simple_path(g, std::span<const VertexId>(p.path));
                       vertices.insert(p.path.begin(), p.path.end());
                       for (std::size_t i = 1; i < p.path.size(); ++i) {
                           edges.insert(make_edge_key(p.path[i - 1], p.path[i]));
                       }
                   },
                   [&](const PairConstraint& p) {
                       if (p.first == p.second) {
                           throw PreconditionError("pair constraint needs two distinct vertices");
                       }
                       vertices.insert(p.first);
                       vertices.insert(p.second);
                   },
               },
               c);
    return brute_gf<R>(g, vertices, edges, vertex_cap);
}

template ExactInt brute_gf<ExactInt>(const WeightedGraph<ExactInt>&, const ContainmentConstraint&, std::size_t);
template ExactRational brute_gf<ExactRational>(const WeightedGraph<ExactRational>&, const ContainmentConstraint&,
                                               std::size_t);

}  // namespace stn
