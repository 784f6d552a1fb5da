#include "stn/expectations.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "stn/errors.hpp"

namespace stn {

namespace {

void require_n(std::size_t n) {
    if (n < 1) {
        throw PreconditionError("n must be at least 1");
    }
}

// s = 4 p1 + p2, the expected growth excess of the anchored count.
ExactRational growth_excess(const ProbabilityPair& p) {
    return ExactRational(4 * p.p1 + p.p2);
}

ExactInt require_integral(const ExactRational& q, const char* what) {
    if (!is_integral(q)) {
        throw InternalError(std::string(what) + " is not integral: " + q.get_str());
    }
    return q.get_num();
}

}  // namespace

ExpectationResult expected_stn(ChainFamily family, std::size_t n, const ProbabilityPair& p) {
    require_n(n);
    p.validate();
    const ExactRational s = growth_excess(p);
    const ExactRational d = 11 + s;
    const ExactRational growth = pow(ExactRational(12 + s), n);
    const ExactRational nn(static_cast<unsigned long>(n));
    ExactRational value;
    if (family == ChainFamily::Polyphenylene) {
        const ExactRational lead = ExactRational(441) / (d * d);
        value = lead * growth + (144 * p.p1 + 36 * p.p2 - 45) / d * nn - lead;
    } else {
        const ExactRational lead = ExactRational(400) / (d * d);
        value = lead * growth + (140 * p.p1 + 35 * p.p2 - 15) / d * nn - lead + 1;
    }
    value.canonicalize();
    if (n <= 2) {
        require_integral(value, "expected subtree number for n <= 2");
    }
    return ExpectationResult{value, n, family, p};
}

ExactRational expected_anchor(ChainFamily family, std::size_t n, const ProbabilityPair& p) {
    require_n(n);
    p.validate();
    const ExactRational s = growth_excess(p);
    const ExactRational growth = pow(ExactRational(12 + s), n);
    const int scale = family == ChainFamily::Polyphenylene ? 21 : 20;
    const ExactRational c = ExactRational(scale) / (11 + s);
    ExactRational value = c * growth - c;
    if (family == ChainFamily::Spiro) {
        value += 1;
    }
    value.canonicalize();
    return value;
}

ExactRational expected_anchor_recursive(ChainFamily family, std::size_t n, const ProbabilityPair& p) {
    require_n(n);
    p.validate();
    const ExactRational s = growth_excess(p);
    const ExactRational factor = 12 + s;
    const ExactRational constant = family == ChainFamily::Polyphenylene ? ExactRational(21) : ExactRational(9 - s);
    ExactRational value = 21;
    for (std::size_t i = 2; i <= n; ++i) {
        value = factor * value + constant;
    }
    return value;
}

ExactInt special_chain_stn(AttachmentMode kind, ChainFamily family, std::size_t n) {
    require_n(n);
    const ExactRational nn(static_cast<unsigned long>(n));
    ExactRational value;
    if (family == ChainFamily::Polyphenylene) {
        switch (kind) {
            case AttachmentMode::Ortho:
                value = ExactRational(49) * (pow(ExactRational(16), n) - 1) / 25 + ExactRational(33) * nn / 5;
                break;
            case AttachmentMode::Meta:
                value = ExactRational(49) * (pow(ExactRational(13), n) - 1) / 16 - ExactRational(3) * nn / 4;
                break;
            case AttachmentMode::Para:
                value = ExactRational(441) * (pow(ExactRational(12), n) - 1) / 121 - ExactRational(45) * nn / 11;
                break;
        }
    } else {
        const ExactRational m = nn - 1;
        switch (kind) {
            case AttachmentMode::Ortho:
                value = ExactRational(256) * (pow(ExactRational(16), n - 1) - 1) / 9 + ExactRational(25) * m / 3 + 36;
                break;
            case AttachmentMode::Meta:
                value = ExactRational(325) * (pow(ExactRational(13), n - 1) - 1) / 9 + ExactRational(5) * m / 3 + 36;
                break;
            case AttachmentMode::Para:
                value =
                    ExactRational(4800) * (pow(ExactRational(12), n - 1) - 1) / 121 - ExactRational(15) * m / 11 + 36;
                break;
        }
    }
    value.canonicalize();
    return require_integral(value, "special chain subtree number");
}

ExactRational relation_residual(std::size_t n, const ProbabilityPair& p) {
    const ExactRational poly = expected_stn(ChainFamily::Polyphenylene, n, p).value;
    const ExactRational spiro = expected_stn(ChainFamily::Spiro, n, p).value;
    ExactRational r = 441 * spiro - ExactRational(1035 * static_cast<unsigned long>(n)) - 441 - 400 * poly;
    r.canonicalize();
    return r;
}

ExactRational average_stn(ChainFamily family, std::size_t n) {
    require_n(n);
    const ExactRational growth = pow(ExactRational(41, 3), n);
    const ExactRational nn(static_cast<unsigned long>(n));
    ExactRational value;
    if (family == ChainFamily::Polyphenylene) {
        const ExactRational lead(3969, 1444);
        value = lead * growth + ExactRational(45, 38) * nn - lead;
    } else {
        value = ExactRational(900, 361) * growth + ExactRational(130, 38) * nn - ExactRational(539, 361);
    }
    value.canonicalize();
    return value;
}

ExactRational exhaustive_expectation(ChainFamily family, std::size_t n, const ProbabilityPair& p, std::size_t cap) {
    require_n(n);
    p.validate();
    ExactRational total = 0;
    for_each_spec(
        family, n,
        [&](const ChainSpec& spec) {
            ExactRational weight = 1;
            for (AttachmentMode m : spec.modes) {
                weight *= p.of(m);
            }
            if (weight != 0) {
                total += weight * ExactRational(chain_stn(spec).total);
            }
        },
        cap);
    total.canonicalize();
    return total;
}

MonteCarloResult monte_carlo_estimate(ChainFamily family, std::size_t n, const ProbabilityPair& p,
                                      std::size_t samples, std::uint64_t seed, unsigned threads) {
    require_n(n);
    p.validate();
    if (samples < 2) {
        throw PreconditionError("Monte Carlo needs at least 2 samples");
    }
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, samples));

    struct Partial {
        ExactInt sum = 0;
        ExactInt sum_squares = 0;
    };
    std::vector<Partial> partials(threads);
    {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            workers.emplace_back([&, t] {
                Partial& acc = partials[t];
                for (std::size_t i = t; i < samples; i += threads) {
                    const ExactInt x = chain_stn(random_chain(family, n, p, substream_seed(seed, i))).total;
                    acc.sum += x;
                    acc.sum_squares += x * x;
                }
            });
        }
    }
    ExactInt sum = 0;
    ExactInt sum_squares = 0;
    for (const Partial& part : partials) {
        sum += part.sum;
        sum_squares += part.sum_squares;
    }

    const ExactInt count(static_cast<unsigned long>(samples));
    ExactRational mean(sum, count);
    mean.canonicalize();
    // Unbiased variance of the mean: (N sum x^2 - (sum x)^2) / (N^2 (N-1)).
    ExactRational var_of_mean(count * sum_squares - sum * sum, count * count * (count - 1));
    var_of_mean.canonicalize();

    MonteCarloResult out;
    out.exact_mean = mean;
    out.mean = to_double(mean);
    out.standard_error = var_of_mean == 0 ? 0.0 : std::sqrt(to_double(var_of_mean));
    out.samples = samples;
    out.seed = seed;
    return out;
}

}  // namespace stn
