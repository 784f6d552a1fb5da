#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stn::cli {

/// Process exit status of the `stn` tool.
enum ExitCode : int {
    kOk = 0,
    kInternalError = 1,
    kParseError = 2,         // malformed flags, rationals, mode strings or graph files
    kPreconditionError = 3,  // well-formed input outside an operation's domain
    kMismatch = 4,           // a --brute / --method all cross-check disagreed
    kCapExceeded = 5,        // brute-force or exhaustive enumeration cap hit
};

enum class Format { Text, Json, Csv };

using Fields = std::vector<std::pair<std::string, std::string>>;

/// One result row. Exact values are strings: integers verbatim, rationals as
/// `a/b` with a separate `*_decimal` approximation field.
struct OutputRecord {
    std::string command;
    Fields inputs;
    Fields results;
    double runtime_ms = 0.0;
};

struct CommandOutcome {
    std::vector<OutputRecord> records;
    int exit_code = kOk;
};

struct GraphOptions {
    std::string file;
    std::optional<std::uint32_t> vertex;
    std::vector<std::uint32_t> path;
    std::vector<std::uint32_t> pair;
    bool brute = false;
    std::size_t brute_cap = 20;
};

struct ChainOptions {
    std::string family = "poly";
    std::size_t n = 1;
    std::optional<std::string> modes;
    std::optional<std::string> kind;
    bool brute = false;
    std::size_t brute_cap = 20;
    std::optional<std::string> dump_graph;
};

struct ExpectOptions {
    std::string family = "poly";
    std::size_t n_first = 1;
    std::size_t n_last = 1;
    std::string p1 = "1/3";
    std::string p2 = "1/3";
    std::string method = "closed";  // closed | exhaustive | mc | all
    bool average = false;
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::size_t spec_cap = 59049;
};

// The commands throw stn::ParseError / PreconditionError / CapExceededError;
// run() maps those onto exit codes.
CommandOutcome cmd_graph(const GraphOptions& opts);
CommandOutcome cmd_chain(const ChainOptions& opts);
CommandOutcome cmd_expect(const ExpectOptions& opts);

/// Parses `a` or `a:b` (inclusive).
std::pair<std::size_t, std::size_t> parse_n_range(const std::string& text);

void render(std::ostream& out, const std::vector<OutputRecord>& records, Format format);

/// Full command line entry point; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stn::cli
