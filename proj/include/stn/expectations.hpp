#pragma once

#include <cstddef>
#include <cstdint>

#include "stn/chains.hpp"
#include "stn/ring.hpp"

namespace stn {

struct ExpectationResult {
    ExactRational value;
    std::size_t n = 0;
    ChainFamily family = ChainFamily::Polyphenylene;
    ProbabilityPair p;
};

struct MonteCarloResult {
    double mean = 0.0;
    double standard_error = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    /// Exact sample mean, before conversion.
    ExactRational exact_mean;

    friend bool operator==(const MonteCarloResult&, const MonteCarloResult&) = default;
};

/// Expected subtree number of the random chain, with s = 4 p1 + p2:
///   poly:  441/(11+s)^2 (12+s)^n + (144 p1 + 36 p2 - 45)/(11+s) n - 441/(11+s)^2
///   spiro: 400/(11+s)^2 (12+s)^n + (140 p1 + 35 p2 - 15)/(11+s) n - 400/(11+s)^2 + 1
ExpectationResult expected_stn(ChainFamily family, std::size_t n, const ProbabilityPair& p);

/// Expected anchored count after n hexagons:
///   poly:  21/(11+s) (12+s)^n - 21/(11+s)
///   spiro: 20/(11+s) (12+s)^n + 1 - 20/(11+s)
ExactRational expected_anchor(ChainFamily family, std::size_t n, const ProbabilityPair& p);

/// The same quantity by unrolling T_n = (12+s) T_{n-1} + 21 (poly) or
/// C_n = (12+s) C_{n-1} + 9 - s (spiro) from 21.
ExactRational expected_anchor_recursive(ChainFamily family, std::size_t n, const ProbabilityPair& p);

/// Closed-form subtree numbers of the ortho/meta/para chains. Throws
/// InternalError if the formula does not come out integral.
ExactInt special_chain_stn(AttachmentMode kind, ChainFamily family, std::size_t n);

/// 441 E_spiro - 1035 n - 441 - 400 E_poly; zero for every valid input.
ExactRational relation_residual(std::size_t n, const ProbabilityPair& p);

/// Mean subtree number over all 3^(n-2) chains:
///   poly:  3969/1444 (41/3)^n + 45/38 n - 3969/1444
///   spiro: 900/361 (41/3)^n + 130/38 n - 539/361
ExactRational average_stn(ChainFamily family, std::size_t n);

/// Sum over all specs of P(spec) * chain_stn(spec), exactly.
ExactRational exhaustive_expectation(ChainFamily family, std::size_t n, const ProbabilityPair& p,
                                     std::size_t cap = kDefaultSpecCap);

/// Sample i uses random_chain(..., substream_seed(seed, i)). Counts are
/// summed exactly, so the result does not depend on `threads` (0 picks the
/// hardware concurrency).
MonteCarloResult monte_carlo_estimate(ChainFamily family, std::size_t n, const ProbabilityPair& p,
                                      std::size_t samples, std::uint64_t seed, unsigned threads = 0);

}  // namespace stn
