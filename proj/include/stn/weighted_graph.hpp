#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stn/errors.hpp"
#include "stn/ring.hpp"

namespace stn {

/// Opaque, stable vertex handle. Ids stay valid when other vertices are
/// removed (removal leaves a tombstone).
struct VertexId {
    std::uint32_t value = 0;

    friend auto operator<=>(VertexId, VertexId) = default;
    friend bool operator==(VertexId, VertexId) = default;
};

inline std::string to_string(VertexId v) {
    return std::to_string(v.value);
}

template <CommutativeRing R>
struct WeightedEdge {
    VertexId u;  // u < v
    VertexId v;
    R weight;
};

/// Simple undirected graph with a ring weight on every vertex and edge.
///
/// Edge weights are stored on both endpoints' adjacency maps and kept in
/// sync. Connectivity is not enforced during construction; operations that
/// need it check it.
template <CommutativeRing R>
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// `n` unit-weight vertices with ids 0..n-1.
    explicit WeightedGraph(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            add_vertex();
        }
    }

    VertexId add_vertex(R weight = ring_one<R>()) {
        slots_.push_back(Slot{std::move(weight), {}});
        ++live_vertices_;
        return VertexId{static_cast<std::uint32_t>(slots_.size() - 1)};
    }

    void add_edge(VertexId u, VertexId v, R weight = ring_one<R>()) {
        if (u == v) {
            throw PreconditionError("self-loop at vertex " + to_string(u));
        }
        Slot& su = slot(u);
        Slot& sv = slot(v);
        if (su.adjacent.contains(v.value)) {
            throw PreconditionError("parallel edge " + to_string(u) + "-" + to_string(v));
        }
        su.adjacent.emplace(v.value, weight);
        sv.adjacent.emplace(u.value, std::move(weight));
        ++edge_count_;
    }

    void remove_edge(VertexId u, VertexId v) {
        Slot& su = slot(u);
        Slot& sv = slot(v);
        if (su.adjacent.erase(v.value) == 0) {
            throw PreconditionError("no edge " + to_string(u) + "-" + to_string(v));
        }
        sv.adjacent.erase(u.value);
        --edge_count_;
    }

    /// Removes `v` and its incident edges; other ids are unaffected.
    void remove_vertex(VertexId v) {
        Slot& sv = slot(v);
        for (const auto& [w, _] : sv.adjacent) {
            slots_[w]->adjacent.erase(v.value);
            --edge_count_;
        }
        slots_[v.value].reset();
        --live_vertices_;
    }

    bool has_vertex(VertexId v) const {
        return v.value < slots_.size() && slots_[v.value].has_value();
    }

    bool has_edge(VertexId u, VertexId v) const {
        return has_vertex(u) && has_vertex(v) && slots_[u.value]->adjacent.contains(v.value);
    }

    const R& vertex_weight(VertexId v) const { return slot(v).weight; }

    void set_vertex_weight(VertexId v, R weight) { slot(v).weight = std::move(weight); }

    const R& edge_weight(VertexId u, VertexId v) const {
        const Slot& su = slot(u);
        auto it = su.adjacent.find(v.value);
        if (it == su.adjacent.end()) {
            throw PreconditionError("no edge " + to_string(u) + "-" + to_string(v));
        }
        return it->second;
    }

    void set_edge_weight(VertexId u, VertexId v, R weight) {
        if (!has_edge(u, v)) {
            throw PreconditionError("no edge " + to_string(u) + "-" + to_string(v));
        }
        slots_[u.value]->adjacent[v.value] = weight;
        slots_[v.value]->adjacent[u.value] = std::move(weight);
    }

    std::size_t degree(VertexId v) const { return slot(v).adjacent.size(); }

    /// Neighbours in increasing id order.
    std::vector<VertexId> neighbors(VertexId v) const {
        std::vector<VertexId> out;
        out.reserve(slot(v).adjacent.size());
        for (const auto& [w, _] : slot(v).adjacent) {
            out.push_back(VertexId{w});
        }
        return out;
    }

    /// Live vertices in increasing id order.
    std::vector<VertexId> vertices() const {
        std::vector<VertexId> out;
        out.reserve(live_vertices_);
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            if (slots_[i]) {
                out.push_back(VertexId{static_cast<std::uint32_t>(i)});
            }
        }
        return out;
    }

    /// Edges with u < v, sorted lexicographically.
    std::vector<WeightedEdge<R>> edges() const {
        std::vector<WeightedEdge<R>> out;
        out.reserve(edge_count_);
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            if (!slots_[i]) {
                continue;
            }
            for (const auto& [w, g] : slots_[i]->adjacent) {
                if (w > i) {
                    out.push_back({VertexId{static_cast<std::uint32_t>(i)}, VertexId{w}, g});
                }
            }
        }
        return out;
    }

    std::size_t vertex_count() const { return live_vertices_; }
    std::size_t edge_count() const { return edge_count_; }

    /// One past the largest id ever issued (tombstones included).
    std::size_t id_bound() const { return slots_.size(); }

    bool is_connected() const {
        if (live_vertices_ == 0) {
            return false;
        }
        std::vector<bool> seen(slots_.size(), false);
        std::vector<std::uint32_t> stack{vertices().front().value};
        seen[stack.back()] = true;
        std::size_t reached = 0;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            ++reached;
            for (const auto& [w, _] : slots_[x]->adjacent) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        return reached == live_vertices_;
    }

    friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

private:
    struct Slot {
        R weight;
        std::map<std::uint32_t, R> adjacent;

        friend bool operator==(const Slot&, const Slot&) = default;
    };

    Slot& slot(VertexId v) {
        if (!has_vertex(v)) {
            throw PreconditionError("no vertex " + to_string(v));
        }
        return *slots_[v.value];
    }

    const Slot& slot(VertexId v) const {
        if (!has_vertex(v)) {
            throw PreconditionError("no vertex " + to_string(v));
        }
        return *slots_[v.value];
    }

    std::vector<std::optional<Slot>> slots_;
    std::size_t live_vertices_ = 0;
    std::size_t edge_count_ = 0;
};

/// Copies `g` with every weight converted by `convert`, preserving ids.
template <CommutativeRing To, CommutativeRing From, class Convert>
WeightedGraph<To> map_weights(const WeightedGraph<From>& g, Convert convert) {
    WeightedGraph<To> out;
    for (std::size_t i = 0; i < g.id_bound(); ++i) {
        VertexId v{static_cast<std::uint32_t>(i)};
        out.add_vertex(g.has_vertex(v) ? To(convert(g.vertex_weight(v))) : ring_one<To>());
    }
    for (std::size_t i = 0; i < g.id_bound(); ++i) {
        VertexId v{static_cast<std::uint32_t>(i)};
        if (!g.has_vertex(v)) {
            out.remove_vertex(v);
        }
    }
    for (const auto& e : g.edges()) {
        out.add_edge(e.u, e.v, To(convert(e.weight)));
    }
    return out;
}

}  // namespace stn
