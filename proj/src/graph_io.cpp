#include "stn/graph_io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

namespace stn {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;) {
        out.push_back(tok);
    }
    return out;
}

std::uint32_t parse_vertex(const std::string& tok, std::size_t n, std::size_t line) {
    ExactInt id;
    try {
        id = parse_integer(tok);
    } catch (const ParseError&) {
        throw ParseError("invalid vertex id '" + tok + "'", line);
    }
    if (id < 0 || id >= static_cast<unsigned long>(n)) {
        throw ParseError("vertex id " + tok + " out of range [0, " + std::to_string(n) + ")", line);
    }
    return static_cast<std::uint32_t>(id.get_ui());
}

ExactRational parse_weight(const std::string& tok, std::size_t line) {
    try {
        return parse_rational(tok);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), line);
    }
}

}  // namespace

WeightedGraph<ExactRational> read_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto next_content = [&](std::vector<std::string>& fields) {
        while (std::getline(in, line)) {
            ++lineno;
            fields = split_fields(line);
            if (!fields.empty() && fields.front().front() != '#') {
                return true;
            }
        }
        return false;
    };

    std::vector<std::string> fields;
    if (!next_content(fields)) {
        throw ParseError("missing header line 'n m'", lineno + 1);
    }
    if (fields.size() != 2) {
        throw ParseError("header must be 'n m'", lineno);
    }
    ExactInt n_big;
    ExactInt m_big;
    try {
        n_big = parse_integer(fields[0]);
        m_big = parse_integer(fields[1]);
    } catch (const ParseError&) {
        throw ParseError("header must be two non-negative integers", lineno);
    }
    if (n_big < 1 || m_big < 0 || !n_big.fits_uint_p() || !m_big.fits_uint_p()) {
        throw ParseError("header counts out of range", lineno);
    }
    const std::size_t n = n_big.get_ui();
    const std::size_t m = m_big.get_ui();

    WeightedGraph<ExactRational> g(n);
    for (std::size_t i = 0; i < m; ++i) {
        if (!next_content(fields)) {
            throw ParseError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(i),
                             lineno + 1);
        }
        if (fields.size() < 2 || fields.size() > 3 || fields[0] == "vw") {
            throw ParseError("edge line must be 'u v [g]'", lineno);
        }
        VertexId u{parse_vertex(fields[0], n, lineno)};
        VertexId v{parse_vertex(fields[1], n, lineno)};
        ExactRational w = fields.size() == 3 ? parse_weight(fields[2], lineno) : ExactRational(1);
        try {
            g.add_edge(u, v, w);
        } catch (const PreconditionError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    while (next_content(fields)) {
        if (fields[0] != "vw" || fields.size() < 2 || fields.size() > 3) {
            throw ParseError("expected vertex weight line 'vw u [f]'", lineno);
        }
        VertexId u{parse_vertex(fields[1], n, lineno)};
        g.set_vertex_weight(u, fields.size() == 3 ? parse_weight(fields[2], lineno) : ExactRational(1));
    }
    return g;
}

WeightedGraph<ExactRational> read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open graph file '" + path + "'");
    }
    return read_graph(in);
}

template <CommutativeRing R>
void write_graph(std::ostream& out, const WeightedGraph<R>& g) {
    std::map<VertexId, std::size_t> dense;
    for (VertexId v : g.vertices()) {
        dense.emplace(v, dense.size());
    }
    const R one = ring_one<R>();
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) {
        out << dense.at(e.u) << ' ' << dense.at(e.v);
        if (e.weight != one) {
            out << ' ' << RingTraits<R>::to_string(e.weight);
        }
        out << '\n';
    }
    for (VertexId v : g.vertices()) {
        if (g.vertex_weight(v) != one) {
            out << "vw " << dense.at(v) << ' ' << RingTraits<R>::to_string(g.vertex_weight(v)) << '\n';
        }
    }
}

template void write_graph<ExactInt>(std::ostream&, const WeightedGraph<ExactInt>&);
template void write_graph<ExactRational>(std::ostream&, const WeightedGraph<ExactRational>&);

}  // namespace stn
