#include "stn/brute_oracle.hpp"

#include <algorithm>
#include <string>

#include "stn/errors.hpp"

namespace stn {

namespace {

struct FrontierEdge {
    VertexId inside;
    VertexId outside;
};

template <CommutativeRing R>
class SubtreeGrower {
public:
    SubtreeGrower(const WeightedGraph<R>& g, const std::function<void(const Subtree&)>& visit)
        : g_(g), visit_(visit), in_tree_(g.id_bound(), false) {}

    void run() {
        for (VertexId root : g_.vertices()) {
            root_ = root;
            current_.vertices = {root};
            current_.edges.clear();
            in_tree_[root.value] = true;
            std::vector<FrontierEdge> frontier;
            push_frontier(root, frontier);
            grow(frontier);
            in_tree_[root.value] = false;
        }
    }

private:
    void push_frontier(VertexId v, std::vector<FrontierEdge>& frontier) const {
        for (VertexId w : g_.neighbors(v)) {
            if (w > root_ && !in_tree_[w.value]) {
                frontier.push_back({v, w});
            }
        }
    }

    // Emits the current tree extended by every subset-choice of `frontier`.
    void grow(std::vector<FrontierEdge> frontier) {
        // Edges whose outer end joined the tree meanwhile would close a cycle.
        std::erase_if(frontier, [&](const FrontierEdge& e) { return in_tree_[e.outside.value]; });
        if (frontier.empty()) {
            emit();
            return;
        }
        FrontierEdge e = frontier.back();
        frontier.pop_back();

        grow(frontier);  // exclude e

        in_tree_[e.outside.value] = true;
        current_.vertices.push_back(e.outside);
        current_.edges.push_back(make_edge_key(e.inside, e.outside));
        push_frontier(e.outside, frontier);
        grow(std::move(frontier));  // include e
        current_.edges.pop_back();
        current_.vertices.pop_back();
        in_tree_[e.outside.value] = false;
    }

    void emit() {
        Subtree out = current_;
        std::sort(out.vertices.begin(), out.vertices.end());
        std::sort(out.edges.begin(), out.edges.end());
        visit_(out);
    }

    const WeightedGraph<R>& g_;
    const std::function<void(const Subtree&)>& visit_;
    std::vector<bool> in_tree_;
    VertexId root_;
    Subtree current_;
};

}  // namespace

template <CommutativeRing R>
void for_each_subtree(const WeightedGraph<R>& g, const std::function<void(const Subtree&)>& visit,
                      std::size_t vertex_cap) {
    if (g.vertex_count() > vertex_cap) {
        throw CapExceededError("brute-force enumeration is capped at " + std::to_string(vertex_cap) +
                               " vertices; graph has " + std::to_string(g.vertex_count()));
    }
    SubtreeGrower<R>(g, visit).run();
}

template <CommutativeRing R>
std::vector<Subtree> enumerate_subtrees(const WeightedGraph<R>& g, std::size_t vertex_cap) {
    std::vector<Subtree> out;
    for_each_subtree<R>(g, [&](const Subtree& t) { out.push_back(t); }, vertex_cap);
    return out;
}

template <CommutativeRing R>
R brute_gf(const WeightedGraph<R>& g, const std::set<VertexId>& required_vertices,
           const std::set<EdgeKey>& required_edges, std::size_t vertex_cap) {
    for (VertexId v : required_vertices) {
        if (!g.has_vertex(v)) {
            throw PreconditionError("required vertex " + to_string(v) + " is not in the graph");
        }
    }
    for (const auto& [a, b] : required_edges) {
        if (!g.has_edge(a, b)) {
            throw PreconditionError("required edge " + to_string(a) + "-" + to_string(b) +
                                    " is not in the graph");
        }
    }
    std::set<EdgeKey> normalized;
    for (const auto& [a, b] : required_edges) {
        normalized.insert(make_edge_key(a, b));
    }
    R total = ring_zero<R>();
    for_each_subtree<R>(
        g,
        [&](const Subtree& t) {
            bool ok = std::includes(t.vertices.begin(), t.vertices.end(), required_vertices.begin(),
                                    required_vertices.end());
            ok = ok && std::includes(t.edges.begin(), t.edges.end(), normalized.begin(), normalized.end());
            if (!ok) {
                return;
            }
            R w = ring_one<R>();
            for (VertexId v : t.vertices) {
                w *= g.vertex_weight(v);
            }
            for (const auto& [a, b] : t.edges) {
                w *= g.edge_weight(a, b);
            }
            total += w;
        },
        vertex_cap);
    return total;
}

#define STN_INSTANTIATE_BRUTE(R)                                                                  \
    template void for_each_subtree<R>(const WeightedGraph<R>&,                                    \
                                      const std::function<void(const Subtree&)>&, std::size_t);   \
    template std::vector<Subtree> enumerate_subtrees<R>(const WeightedGraph<R>&, std::size_t);    \
    template R brute_gf<R>(const WeightedGraph<R>&, const std::set<VertexId>&,                    \
                           const std::set<EdgeKey>&, std::size_t);

STN_INSTANTIATE_BRUTE(ExactInt)
STN_INSTANTIATE_BRUTE(ExactRational)

#undef STN_INSTANTIATE_BRUTE

}  // namespace stn
