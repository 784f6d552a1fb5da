#include "stn/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stn/brute_oracle.hpp"
#include "stn/chains.hpp"
#include "stn/constraint.hpp"
#include "stn/expectations.hpp"
#include "stn/graph_io.hpp"
#include "stn/subtree_engine.hpp"

namespace stn::cli {

namespace {

constexpr const char* kCsvSchema = "# stn-csv v1";

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void add_exact(Fields& fields, const std::string& key, const ExactRational& value) {
    fields.emplace_back(key, exact_string(value));
    if (!is_integral(value)) {
        fields.emplace_back(key + "_decimal", decimal_string(value));
    }
}

// For CSV the column set must not depend on whether a value happens to be
// integral, so rational-valued columns always carry a decimal companion.
void add_exact_with_decimal(Fields& fields, const std::string& key, const ExactRational& value) {
    fields.emplace_back(key, exact_string(value));
    fields.emplace_back(key + "_decimal", decimal_string(value));
}

std::string format_runtime(double ms) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(3) << ms;
    return ss.str();
}

std::string format_double(double x) {
    std::ostringstream ss;
    ss << std::setprecision(17) << x;
    return ss.str();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

ProbabilityPair parse_probabilities(const std::string& p1, const std::string& p2) {
    ProbabilityPair p{parse_rational(p1), parse_rational(p2)};
    p.validate();
    return p;
}

}  // namespace

CommandOutcome cmd_graph(const GraphOptions& opts) {
    Stopwatch clock;
    const int constraint_flags = (opts.vertex ? 1 : 0) + (opts.path.empty() ? 0 : 1) + (opts.pair.empty() ? 0 : 1);
    if (constraint_flags > 1) {
        throw PreconditionError("--vertex, --path and --pair are mutually exclusive");
    }
    const WeightedGraph<ExactRational> g = read_graph_file(opts.file);

    ContainmentConstraint constraint = NoConstraint{};
    if (opts.vertex) {
        constraint = VertexConstraint{VertexId{*opts.vertex}};
    } else if (!opts.path.empty()) {
        PathConstraint p;
        for (auto id : opts.path) {
            p.path.push_back(VertexId{id});
        }
        constraint = p;
    } else if (!opts.pair.empty()) {
        if (opts.pair.size() != 2) {
            throw ParseError("--pair takes exactly two vertices");
        }
        constraint = PairConstraint{VertexId{opts.pair[0]}, VertexId{opts.pair[1]}};
    }

    OutputRecord rec;
    rec.command = "graph";
    rec.inputs = {{"file", opts.file},
                  {"vertices", std::to_string(g.vertex_count())},
                  {"edges", std::to_string(g.edge_count())},
                  {"constraint", describe(constraint)}};

    const GraphClass cls = classify(g);
    rec.results.emplace_back("class", to_string(cls));
    CommandOutcome out;
    if (cls == GraphClass::Other && opts.brute) {
        // Outside the engine's reach; the oracle alone still answers.
        add_exact(rec.results, "brute", brute_gf(g, constraint, opts.brute_cap));
        rec.results.emplace_back("verdict", "ORACLE_ONLY");
        rec.runtime_ms = clock.elapsed_ms();
        out.records.push_back(std::move(rec));
        return out;
    }
    const ExactRational value = subtree_gf(g, constraint);
    add_exact(rec.results, "value", value);

    if (opts.brute) {
        const ExactRational oracle = brute_gf(g, constraint, opts.brute_cap);
        add_exact(rec.results, "brute", oracle);
        const bool match = oracle == value;
        rec.results.emplace_back("verdict", match ? "MATCH" : "MISMATCH");
        out.exit_code = match ? kOk : kMismatch;
    }
    rec.runtime_ms = clock.elapsed_ms();
    out.records.push_back(std::move(rec));
    return out;
}

CommandOutcome cmd_chain(const ChainOptions& opts) {
    Stopwatch clock;
    if (opts.modes && opts.kind) {
        throw PreconditionError("--modes and --kind are mutually exclusive");
    }
    ChainSpec spec;
    spec.family = parse_family(opts.family);
    spec.n = opts.n;
    if (opts.kind) {
        spec = uniform_chain(spec.family, spec.n, parse_kind(*opts.kind));
    } else if (opts.modes) {
        spec.modes = parse_modes(*opts.modes);
    } else if (spec.n > 2) {
        throw PreconditionError("a chain with more than two hexagons needs --modes or --kind");
    }
    spec.validate();

    OutputRecord rec;
    rec.command = "chain";
    rec.inputs = {{"family", to_string(spec.family)}, {"n", std::to_string(spec.n)}, {"modes", format_modes(spec.modes)}};
    const ChainCount count = chain_stn(spec);
    rec.results.emplace_back("total", count.total.get_str());

    CommandOutcome out;
    if (opts.brute || opts.dump_graph) {
        const WeightedGraph<ExactInt> g = build_chain_graph(spec);
        if (opts.dump_graph) {
            std::ofstream file(*opts.dump_graph);
            if (!file) {
                throw PreconditionError("cannot write graph file '" + *opts.dump_graph + "'");
            }
            write_graph(file, g);
            rec.results.emplace_back("graph_file", *opts.dump_graph);
        }
        if (opts.brute) {
            const ExactInt oracle = brute_gf(g, {}, {}, opts.brute_cap);
            rec.results.emplace_back("brute", oracle.get_str());
            const bool match = oracle == count.total;
            rec.results.emplace_back("verdict", match ? "MATCH" : "MISMATCH");
            out.exit_code = match ? kOk : kMismatch;
        }
    }
    rec.runtime_ms = clock.elapsed_ms();
    out.records.push_back(std::move(rec));
    return out;
}

CommandOutcome cmd_expect(const ExpectOptions& opts) {
    const ChainFamily family = parse_family(opts.family);
    const std::string& method = opts.method;
    if (method != "closed" && method != "exhaustive" && method != "mc" && method != "all") {
        throw ParseError("invalid method '" + method + "' (expected closed, exhaustive, mc or all)");
    }
    if (opts.n_first < 1 || opts.n_last < opts.n_first) {
        throw PreconditionError("n range must satisfy 1 <= first <= last");
    }
    const ProbabilityPair p = opts.average ? ProbabilityPair{ExactRational(1, 3), ExactRational(1, 3)}
                                           : parse_probabilities(opts.p1, opts.p2);

    CommandOutcome out;
    for (std::size_t n = opts.n_first; n <= opts.n_last; ++n) {
        Stopwatch clock;
        OutputRecord rec;
        rec.command = "expect";
        rec.inputs = {{"family", to_string(family)},
                      {"n", std::to_string(n)},
                      {"p1", exact_string(p.p1)},
                      {"p2", exact_string(p.p2)},
                      {"method", method},
                      {"average", opts.average ? "true" : "false"}};
        bool verified = true;

        if (opts.average) {
            const ExactRational avg = average_stn(family, n);
            add_exact_with_decimal(rec.results, "average", avg);
            if (method == "exhaustive" || method == "all") {
                const ExactRational mean = exhaustive_expectation(family, n, p, opts.spec_cap);
                add_exact_with_decimal(rec.results, "exhaustive", mean);
                verified = mean == avg;
                rec.results.emplace_back("verdict", verified ? "MATCH" : "MISMATCH");
            }
        } else if (method == "closed" || method == "all" || method == "exhaustive") {
            const ExactRational closed = expected_stn(family, n, p).value;
            if (method != "exhaustive") {
                add_exact_with_decimal(rec.results, "closed", closed);
            }
            if (method != "closed") {
                const ExactRational exhaustive = exhaustive_expectation(family, n, p, opts.spec_cap);
                add_exact_with_decimal(rec.results, "exhaustive", exhaustive);
                if (method == "all") {
                    rec.results.emplace_back("relation_residual", exact_string(relation_residual(n, p)));
                    verified = exhaustive == closed;
                    rec.results.emplace_back("verdict", verified ? "MATCH" : "MISMATCH");
                }
            }
        }
        if (!opts.average && method == "mc") {
            const MonteCarloResult mc = monte_carlo_estimate(family, n, p, opts.samples, opts.seed, opts.threads);
            const ExactRational closed = expected_stn(family, n, p).value;
            add_exact_with_decimal(rec.results, "closed", closed);
            rec.results.emplace_back("mc_mean", format_double(mc.mean));
            rec.results.emplace_back("mc_stderr", format_double(mc.standard_error));
            const double deviation = std::abs(mc.mean - to_double(closed));
            rec.results.emplace_back("deviation_in_stderr",
                                     mc.standard_error > 0 ? format_double(deviation / mc.standard_error)
                                                           : (deviation == 0 ? "0" : "inf"));
            rec.inputs.emplace_back("samples", std::to_string(mc.samples));
            rec.inputs.emplace_back("seed", std::to_string(mc.seed));
        }
        if (!verified) {
            out.exit_code = kMismatch;
        }
        rec.runtime_ms = clock.elapsed_ms();
        out.records.push_back(std::move(rec));
    }
    return out;
}

std::pair<std::size_t, std::size_t> parse_n_range(const std::string& text) {
    auto parse_count = [&](const std::string& s) -> std::size_t {
        ExactInt v = parse_integer(s);
        if (v < 1 || !v.fits_ulong_p()) {
            throw ParseError("invalid hexagon count '" + s + "'");
        }
        return v.get_ui();
    };
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        const std::size_t n = parse_count(text);
        return {n, n};
    }
    return {parse_count(text.substr(0, colon)), parse_count(text.substr(colon + 1))};
}

void render(std::ostream& out, const std::vector<OutputRecord>& records, Format format) {
    switch (format) {
        case Format::Text:
            for (const auto& r : records) {
                out << r.command;
                for (const auto& [k, v] : r.inputs) {
                    out << ' ' << k << '=' << v;
                }
                out << '\n';
                for (const auto& [k, v] : r.results) {
                    out << "  " << k << ": " << v << '\n';
                }
            }
            break;
        case Format::Json:
            for (const auto& r : records) {
                nlohmann::ordered_json j;
                j["command"] = r.command;
                j["inputs"] = nlohmann::ordered_json::object();
                for (const auto& [k, v] : r.inputs) {
                    j["inputs"][k] = v;
                }
                j["results"] = nlohmann::ordered_json::object();
                for (const auto& [k, v] : r.results) {
                    j["results"][k] = v;
                }
                j["runtime_ms"] = std::round(r.runtime_ms * 1000.0) / 1000.0;
                out << j.dump() << '\n';
            }
            break;
        case Format::Csv: {
            if (records.empty()) {
                break;
            }
            out << kCsvSchema << " command=" << records.front().command << '\n';
            const OutputRecord& head = records.front();
            out << "command";
            for (const auto& [k, _] : head.inputs) {
                out << ',' << k;
            }
            for (const auto& [k, _] : head.results) {
                out << ',' << k;
            }
            out << ",runtime_ms\n";
            for (const auto& r : records) {
                out << csv_escape(r.command);
                for (const auto& [_, v] : r.inputs) {
                    out << ',' << csv_escape(v);
                }
                for (const auto& [_, v] : r.results) {
                    out << ',' << csv_escape(v);
                }
                out << ',' << format_runtime(r.runtime_ms) << '\n';
            }
            break;
        }
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact subtree counting for trees, unicyclic graphs and hexagon chains", "stn"};
    app.require_subcommand(1);

    std::string format_name = "text";
    const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
    app.add_option("--format", format_name, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    GraphOptions graph_opts;
    std::uint32_t vertex = 0;
    auto* graph = app.add_subcommand("graph", "Generating function of a tree or unicyclic graph file");
    graph->add_option("file", graph_opts.file, "Graph text file")->required();
    auto* vertex_opt = graph->add_option("--vertex", vertex, "Count subtrees containing this vertex");
    graph->add_option("--path", graph_opts.path, "Count subtrees containing this path (v0,v1,...)")->delimiter(',');
    graph->add_option("--pair", graph_opts.pair, "Count subtrees containing both vertices (vi,vj)")->delimiter(',');
    graph->add_flag("--brute", graph_opts.brute, "Cross-check against exhaustive enumeration");
    graph->add_option("--brute-cap", graph_opts.brute_cap, "Vertex cap for exhaustive enumeration");
    graph->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

    ChainOptions chain_opts;
    auto* chain = app.add_subcommand("chain", "Exact subtree number of a concrete chain");
    chain->add_option("--family", chain_opts.family, "poly or spiro")->required();
    chain->add_option("--n", chain_opts.n, "Number of hexagons")->required();
    chain->add_option("--modes", chain_opts.modes, "Attachment modes for hexagons 3..n, e.g. OMP");
    chain->add_option("--kind", chain_opts.kind, "Uniform chain: ortho, meta or para");
    chain->add_flag("--brute", chain_opts.brute, "Cross-check against exhaustive enumeration");
    chain->add_option("--brute-cap", chain_opts.brute_cap, "Vertex cap for exhaustive enumeration");
    chain->add_option("--dump-graph", chain_opts.dump_graph, "Write the chain graph to this file");
    chain->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

    ExpectOptions expect_opts;
    std::string n_text;
    std::string n_range;
    auto* expect = app.add_subcommand("expect", "Expected / average subtree numbers of random chains");
    expect->add_option("--family", expect_opts.family, "poly or spiro")->required();
    auto* n_opt = expect->add_option("--n", n_text, "Number of hexagons");
    auto* range_opt = expect->add_option("--n-range", n_range, "Inclusive range first:last");
    n_opt->excludes(range_opt);
    expect->add_option("--p1", expect_opts.p1, "P(ortho) as a rational a/b");
    expect->add_option("--p2", expect_opts.p2, "P(meta) as a rational a/b");
    expect->add_option("--method", expect_opts.method, "closed, exhaustive, mc or all");
    expect->add_flag("--average", expect_opts.average, "Average over all chains (p1 = p2 = 1/3)");
    expect->add_option("--samples", expect_opts.samples, "Monte Carlo sample count");
    expect->add_option("--seed", expect_opts.seed, "Monte Carlo seed");
    expect->add_option("--threads", expect_opts.threads, "Monte Carlo worker threads (0 = all cores)");
    expect->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    try {
        CommandOutcome outcome;
        if (app.got_subcommand(graph)) {
            if (vertex_opt->count() > 0) {
                graph_opts.vertex = vertex;
            }
            outcome = cmd_graph(graph_opts);
        } else if (app.got_subcommand(chain)) {
            outcome = cmd_chain(chain_opts);
        } else {
            if (n_text.empty() && n_range.empty()) {
                throw ParseError("expect needs --n or --n-range");
            }
            if (n_text.find(':') != std::string::npos) {
                throw ParseError("--n takes a single count; use --n-range for ranges");
            }
            std::tie(expect_opts.n_first, expect_opts.n_last) = parse_n_range(n_text.empty() ? n_range : n_text);
            outcome = cmd_expect(expect_opts);
        }
        render(out, outcome.records, formats.at(format_name));
        if (outcome.exit_code == kMismatch) {
            err << "stn: verification MISMATCH\n";
        }
        return outcome.exit_code;
    } catch (const ParseError& e) {
        err << "stn: parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const CapExceededError& e) {
        err << "stn: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const PreconditionError& e) {
        err << "stn: " << e.what() << '\n';
        return kPreconditionError;
    } catch (const std::exception& e) {
        err << "stn: internal error: " << e.what() << '\n';
        return kInternalError;
    }
}

}  // namespace stn::cli
