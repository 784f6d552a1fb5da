#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "stn/ring.hpp"
#include "stn/weighted_graph.hpp"

namespace stn {

enum class ChainFamily { Polyphenylene, Spiro };

/// Where the next link leaves a hexagon, by cycle distance from where the
/// previous link entered: Ortho 1, Meta 2, Para 3.
enum class AttachmentMode { Ortho, Meta, Para };

inline constexpr AttachmentMode kAllModes[] = {AttachmentMode::Ortho, AttachmentMode::Meta,
                                               AttachmentMode::Para};

/// Cycle distance 1/2/3.
int distance(AttachmentMode m);

/// Subtrees of a unit hexagon containing two vertices at this distance:
/// 16, 13, 12.
int pair_count(AttachmentMode m);

/// Subpaths of the path left after deleting one hexagon vertex that contain
/// the vertex at this distance from the deleted one: 5, 8, 9.
/// pair_count(m) + spiro_offset(m) = 21 for every mode.
int spiro_offset(AttachmentMode m);

char mode_char(AttachmentMode m);
AttachmentMode parse_mode_char(char c);

const char* to_string(ChainFamily f);
ChainFamily parse_family(std::string_view s);

const char* to_string(AttachmentMode m);
/// Accepts ortho | meta | para.
AttachmentMode parse_kind(std::string_view s);

/// A concrete chain: `modes[i]` governs the attachment of hexagon i+3.
struct ChainSpec {
    ChainFamily family = ChainFamily::Polyphenylene;
    std::size_t n = 1;
    std::vector<AttachmentMode> modes;

    /// Throws PreconditionError unless n >= 1 and |modes| = max(n-2, 0).
    void validate() const;

    friend bool operator==(const ChainSpec&, const ChainSpec&) = default;
};

/// Uniform-mode spec (ortho, meta or para chain).
ChainSpec uniform_chain(ChainFamily family, std::size_t n, AttachmentMode mode);

/// `OMP`-style string, one character per attachment step 3..n.
std::string format_modes(const std::vector<AttachmentMode>& modes);
std::vector<AttachmentMode> parse_modes(std::string_view text);

struct ChainCount {
    ExactInt total;
    /// anchored[i] counts subtrees of the first i+1 hexagons that contain the
    /// vertex where hexagon i+2 attaches (i = 0 .. n-2).
    std::vector<ExactInt> anchored;
};

/// Unit-weight chain graph. Polyphenylene hexagon i (1-based) owns ids
/// 6(i-1) .. 6i-1 with local vertex 0 receiving the incoming cut edge; spiro
/// hexagon i >= 2 reuses the previous anchor as its local vertex 0 and owns 5
/// fresh ids. The outgoing anchor is local vertex 0 on hexagon 1 and local
/// vertex distance(mode) afterwards.
WeightedGraph<ExactInt> build_chain_graph(const ChainSpec& spec);

/// Exact subtree number in O(n) big-number operations.
ChainCount chain_stn(const ChainSpec& spec);

/// Rational probabilities (P(Ortho), P(Meta)); P(Para) = 1 - p1 - p2.
struct ProbabilityPair {
    ExactRational p1;
    ExactRational p2;

    /// Throws PreconditionError unless p1, p2 >= 0 and p1 + p2 <= 1.
    void validate() const;
    ExactRational para() const { return ExactRational(1) - p1 - p2; }
    ExactRational of(AttachmentMode m) const;

    friend bool operator==(const ProbabilityPair&, const ProbabilityPair&) = default;
};

/// SplitMix64 (Steele, Lea, Flood 2014): the generator behind every random
/// draw in this library. The output sequence is fixed for a given seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// The SplitMix64 output finalizer applied to `z`.
    static std::uint64_t mix(std::uint64_t z);

private:
    std::uint64_t state_;
};

/// Seed of the i-th independent substream of `seed`: mix(seed xor i).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

/// Draws modes i.i.d. from `p`. Each draw takes the top 53 bits u of one
/// SplitMix64 output and picks Ortho if u < p1 * 2^53, else Meta if
/// u < (p1 + p2) * 2^53, else Para; the comparisons are exact.
ChainSpec random_chain(ChainFamily family, std::size_t n, const ProbabilityPair& p, std::uint64_t seed);

inline constexpr std::size_t kDefaultSpecCap = 59049;  // 3^10

/// Number of mode sequences for n hexagons, 3^max(n-2, 0); throws
/// CapExceededError above `cap`.
std::size_t spec_count(std::size_t n, std::size_t cap = kDefaultSpecCap);

/// Visits all 3^max(n-2,0) specs in lexicographic order (Ortho < Meta < Para).
void for_each_spec(ChainFamily family, std::size_t n, const std::function<void(const ChainSpec&)>& visit,
                   std::size_t cap = kDefaultSpecCap);

std::vector<ChainSpec> enumerate_specs(ChainFamily family, std::size_t n, std::size_t cap = kDefaultSpecCap);

}  // namespace stn
