#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "stn/expectations.hpp"

namespace stn {
namespace {

using enum ChainFamily;
using Q = ExactRational;

std::vector<ProbabilityPair> probability_grid() {
    const std::vector<Q> values{Q(0), Q(1, 4), Q(1, 3), Q(1, 2), Q(1)};
    std::vector<ProbabilityPair> out;
    for (const Q& a : values) {
        for (const Q& b : values) {
            if (a + b <= 1) {
                out.push_back({a, b});
            }
        }
    }
    return out;
}

const ProbabilityPair kUniform{Q(1, 3), Q(1, 3)};

TEST(ExpectedStn, Examples) {
    for (const auto& p : probability_grid()) {
        EXPECT_EQ(expected_stn(Polyphenylene, 1, p).value, 36);
        EXPECT_EQ(expected_stn(Spiro, 1, p).value, 36);
        EXPECT_EQ(expected_stn(Polyphenylene, 2, p).value, 513);
        EXPECT_EQ(expected_stn(Spiro, 2, p).value, 471);
    }
    EXPECT_EQ(expected_stn(Polyphenylene, 3, {1, 0}).value, 8046);
    EXPECT_EQ(expected_stn(Spiro, 2, {0, 0}).value, 471);
    auto r = expected_stn(Spiro, 7, {Q(1, 4), Q(1, 2)});
    EXPECT_EQ(r.n, 7U);
    EXPECT_EQ(r.family, Spiro);
    EXPECT_EQ(r.p, (ProbabilityPair{Q(1, 4), Q(1, 2)}));
}

TEST(ExpectedStn, Errors) {
    EXPECT_THROW(expected_stn(Polyphenylene, 0, kUniform), PreconditionError);
    EXPECT_THROW(expected_stn(Polyphenylene, 3, {Q(3, 4), Q(1, 2)}), PreconditionError);
    EXPECT_THROW(expected_stn(Spiro, 3, {Q(-1, 4), Q(1, 2)}), PreconditionError);
}

TEST(ExpectedStn, AtLeastOneHexagonWorth) {
    for (const auto& p : probability_grid()) {
        for (std::size_t n = 1; n <= 20; ++n) {
            EXPECT_GE(expected_stn(Polyphenylene, n, p).value, 36);
            EXPECT_GE(expected_stn(Spiro, n, p).value, 36);
        }
    }
}

TEST(ExpectedAnchor, Examples) {
    EXPECT_EQ(expected_anchor(Polyphenylene, 1, kUniform), 21);
    EXPECT_EQ(expected_anchor(Spiro, 1, kUniform), 21);
    EXPECT_EQ(expected_anchor(Polyphenylene, 2, {0, 0}), 273);
    EXPECT_EQ(expected_anchor(Spiro, 2, {0, 0}), 9 + 12 * 21);
}

TEST(ExpectedAnchor, ClosedFormMatchesRecursion) {
    for (const auto& p : probability_grid()) {
        for (std::size_t n = 1; n <= 50; ++n) {
            EXPECT_EQ(expected_anchor(Polyphenylene, n, p), expected_anchor_recursive(Polyphenylene, n, p));
            EXPECT_EQ(expected_anchor(Spiro, n, p), expected_anchor_recursive(Spiro, n, p));
        }
    }
}

TEST(ExpectedAnchor, MatchesMeanAnchoredCount) {
    // The mean of the last anchored value over all chains, weighted by P.
    const ProbabilityPair p{Q(1, 2), Q(1, 4)};
    for (ChainFamily f : {Polyphenylene, Spiro}) {
        for (std::size_t n = 2; n <= 7; ++n) {
            Q mean = 0;
            for_each_spec(f, n, [&](const ChainSpec& s) {
                Q w = 1;
                for (AttachmentMode m : s.modes) {
                    w *= p.of(m);
                }
                mean += w * Q(chain_stn(s).anchored.back());
            });
            EXPECT_EQ(mean, expected_anchor(f, n - 1, p));
        }
    }
}

TEST(SpecialChainStn, Examples) {
    EXPECT_EQ(special_chain_stn(AttachmentMode::Para, Polyphenylene, 3), 6282);
    EXPECT_EQ(special_chain_stn(AttachmentMode::Meta, Spiro, 3), 6106);
    EXPECT_EQ(special_chain_stn(AttachmentMode::Ortho, Polyphenylene, 1), 36);
}

TEST(SpecialChainStn, MatchesRecursionAndExpectation) {
    const ProbabilityPair degenerate[] = {{1, 0}, {0, 1}, {0, 0}};
    for (ChainFamily f : {Polyphenylene, Spiro}) {
        for (std::size_t k = 0; k < 3; ++k) {
            const AttachmentMode m = kAllModes[k];
            for (std::size_t n = 1; n <= 25; ++n) {
                const ExactInt closed = special_chain_stn(m, f, n);
                EXPECT_EQ(closed, chain_stn(uniform_chain(f, n, m)).total);
                EXPECT_EQ(Q(closed), expected_stn(f, n, degenerate[k]).value);
            }
        }
    }
}

TEST(RelationResidual, VanishesOnGrid) {
    EXPECT_EQ(400 * expected_stn(Polyphenylene, 1, kUniform).value, 14400);
    EXPECT_EQ(441 * expected_stn(Spiro, 1, kUniform).value - 1035 - 441, 14400);
    EXPECT_EQ(relation_residual(7, {Q(1, 4), Q(1, 2)}), 0);
    EXPECT_EQ(relation_residual(50, kUniform), 0);
    for (const auto& p : probability_grid()) {
        for (std::size_t n = 1; n <= 50; n += 7) {
            EXPECT_EQ(relation_residual(n, p), 0);
        }
    }
}

TEST(AverageStn, Examples) {
    EXPECT_EQ(average_stn(Polyphenylene, 1), 36);
    EXPECT_EQ(average_stn(Polyphenylene, 3), 7017);
    EXPECT_EQ(average_stn(Spiro, 3), Q(19118, 3));
    EXPECT_EQ(Q(8046 + 6723 + 6282) / 3, 7017);
    EXPECT_EQ(Q(7306 + 6106 + 5706) / 3, Q(19118, 3));
}

TEST(AverageStn, EqualsUniformExpectation) {
    for (ChainFamily f : {Polyphenylene, Spiro}) {
        for (std::size_t n = 1; n <= 50; ++n) {
            EXPECT_EQ(average_stn(f, n), expected_stn(f, n, kUniform).value);
        }
        for (std::size_t n = 1; n <= 6; ++n) {
            EXPECT_EQ(average_stn(f, n), exhaustive_expectation(f, n, kUniform));
        }
    }
}

TEST(ExhaustiveExpectation, Examples) {
    EXPECT_EQ(exhaustive_expectation(Polyphenylene, 3, {1, 0}), 8046);
    EXPECT_EQ(exhaustive_expectation(Polyphenylene, 3, kUniform), 7017);
    const ProbabilityPair p{Q(1, 2), Q(1, 4)};
    EXPECT_EQ(exhaustive_expectation(Spiro, 4, p), expected_stn(Spiro, 4, p).value);
    EXPECT_THROW(exhaustive_expectation(Spiro, 13, p), CapExceededError);
}

TEST(ExhaustiveExpectation, MatchesClosedFormSmallN) {
    for (const auto& p : probability_grid()) {
        for (ChainFamily f : {Polyphenylene, Spiro}) {
            for (std::size_t n = 1; n <= 6; ++n) {
                EXPECT_EQ(exhaustive_expectation(f, n, p), expected_stn(f, n, p).value);
            }
        }
    }
}

TEST(ExpectedStn, IndependentOfPUpToTwoHexagons) {
    for (ChainFamily f : {Polyphenylene, Spiro}) {
        for (std::size_t n = 1; n <= 2; ++n) {
            const Q first = expected_stn(f, n, probability_grid().front()).value;
            for (const auto& p : probability_grid()) {
                EXPECT_EQ(expected_stn(f, n, p).value, first);
            }
        }
    }
}

TEST(ExpectedStn, SpiroBelowPolyAndRatioApproaches400Over441) {
    for (const auto& p : probability_grid()) {
        // One hexagon is the same graph in both families.
        EXPECT_EQ(expected_stn(Spiro, 1, p).value, expected_stn(Polyphenylene, 1, p).value);
        for (std::size_t n = 2; n <= 50; ++n) {
            EXPECT_LT(expected_stn(Spiro, n, p).value, expected_stn(Polyphenylene, n, p).value);
        }
        const Q ratio = expected_stn(Spiro, 60, p).value / expected_stn(Polyphenylene, 60, p).value;
        EXPECT_LT(std::abs(to_double(ratio - Q(400, 441))), 1e-6);
    }
}

TEST(ExpectedStn, LargeNIsExact) {
    const auto r = expected_stn(Polyphenylene, 300, kUniform);
    EXPECT_EQ(r.value, average_stn(Polyphenylene, 300));
    const ExactInt c = chain_stn(uniform_chain(Polyphenylene, 300, AttachmentMode::Ortho)).total;
    EXPECT_EQ(c, special_chain_stn(AttachmentMode::Ortho, Polyphenylene, 300));
    EXPECT_GT(c.get_str().size(), 300U);
}

TEST(MonteCarlo, DegenerateDistributionHasZeroError) {
    for (ChainFamily f : {Polyphenylene, Spiro}) {
        auto r = monte_carlo_estimate(f, 9, {1, 0}, 50, 17);
        EXPECT_EQ(r.exact_mean, Q(special_chain_stn(AttachmentMode::Ortho, f, 9)));
        EXPECT_EQ(r.standard_error, 0.0);
        EXPECT_EQ(r.samples, 50U);
        EXPECT_EQ(r.seed, 17U);
    }
}

TEST(MonteCarlo, DeterministicAndThreadIndependent) {
    auto a = monte_carlo_estimate(Spiro, 10, kUniform, 2000, 7, 1);
    auto b = monte_carlo_estimate(Spiro, 10, kUniform, 2000, 7, 4);
    auto c = monte_carlo_estimate(Spiro, 10, kUniform, 2000, 7, 0);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
    EXPECT_NE(a, monte_carlo_estimate(Spiro, 10, kUniform, 2000, 8, 1));
}

TEST(MonteCarlo, MeanWithinFourStandardErrors) {
    const ProbabilityPair p{Q(1, 2), Q(1, 4)};
    for (ChainFamily f : {Polyphenylene, Spiro}) {
        auto r = monte_carlo_estimate(f, 8, p, 5000, 2024);
        const double expected = to_double(expected_stn(f, 8, p).value);
        EXPECT_GT(r.standard_error, 0.0);
        EXPECT_LT(std::abs(r.mean - expected), 4 * r.standard_error);
    }
}

TEST(MonteCarlo, Errors) {
    EXPECT_THROW(monte_carlo_estimate(Spiro, 5, kUniform, 1, 0), PreconditionError);
    EXPECT_THROW(monte_carlo_estimate(Spiro, 0, kUniform, 10, 0), PreconditionError);
}

}  // namespace
}  // namespace stn
