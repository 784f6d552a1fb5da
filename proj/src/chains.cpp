#include "stn/chains.hpp"

#include <array>
#include <string>

#include "stn/errors.hpp"

namespace stn {

int distance(AttachmentMode m) {
    switch (m) {
        case AttachmentMode::Ortho:
            return 1;
        case AttachmentMode::Meta:
            return 2;
        case AttachmentMode::Para:
            return 3;
    }
    throw InternalError("bad attachment mode");
}

int pair_count(AttachmentMode m) {
    // Arc through the distance-d side plus arc through the other side of C6:
    // sum_{L=d}^{5} (L-d+1) + sum_{L=6-d}^{5} (L-(6-d)+1).
    switch (m) {
        case AttachmentMode::Ortho:
            return 16;
        case AttachmentMode::Meta:
            return 13;
        case AttachmentMode::Para:
            return 12;
    }
    throw InternalError("bad attachment mode");
}

int spiro_offset(AttachmentMode m) {
    // d (6 - d) subpaths of P5 contain its d-th vertex.
    const int d = distance(m);
    return d * (6 - d);
}

char mode_char(AttachmentMode m) {
    switch (m) {
        case AttachmentMode::Ortho:
            return 'O';
        case AttachmentMode::Meta:
            return 'M';
        case AttachmentMode::Para:
            return 'P';
    }
    throw InternalError("bad attachment mode");
}

AttachmentMode parse_mode_char(char c) {
    switch (c) {
        case 'O':
        case 'o':
            return AttachmentMode::Ortho;
        case 'M':
        case 'm':
            return AttachmentMode::Meta;
        case 'P':
        case 'p':
            return AttachmentMode::Para;
        default:
            throw ParseError(std::string("invalid mode character '") + c + "' (expected O, M or P)");
    }
}

const char* to_string(ChainFamily f) {
    return f == ChainFamily::Polyphenylene ? "poly" : "spiro";
}

ChainFamily parse_family(std::string_view s) {
    if (s == "poly" || s == "polyphenylene") {
        return ChainFamily::Polyphenylene;
    }
    if (s == "spiro") {
        return ChainFamily::Spiro;
    }
    throw ParseError("invalid family '" + std::string(s) + "' (expected poly or spiro)");
}

const char* to_string(AttachmentMode m) {
    switch (m) {
        case AttachmentMode::Ortho:
            return "ortho";
        case AttachmentMode::Meta:
            return "meta";
        case AttachmentMode::Para:
            return "para";
    }
    return "unknown";
}

AttachmentMode parse_kind(std::string_view s) {
    if (s == "ortho") {
        return AttachmentMode::Ortho;
    }
    if (s == "meta") {
        return AttachmentMode::Meta;
    }
    if (s == "para") {
        return AttachmentMode::Para;
    }
    throw ParseError("invalid kind '" + std::string(s) + "' (expected ortho, meta or para)");
}

void ChainSpec::validate() const {
    if (n < 1) {
        throw PreconditionError("a chain needs at least one hexagon");
    }
    const std::size_t expected = n > 2 ? n - 2 : 0;
    if (modes.size() != expected) {
        throw PreconditionError("chain with " + std::to_string(n) + " hexagons needs " + std::to_string(expected) +
                                " attachment modes, got " + std::to_string(modes.size()));
    }
}

ChainSpec uniform_chain(ChainFamily family, std::size_t n, AttachmentMode mode) {
    ChainSpec spec{family, n, std::vector<AttachmentMode>(n > 2 ? n - 2 : 0, mode)};
    spec.validate();
    return spec;
}

std::string format_modes(const std::vector<AttachmentMode>& modes) {
    std::string out;
    out.reserve(modes.size());
    for (AttachmentMode m : modes) {
        out.push_back(mode_char(m));
    }
    return out;
}

std::vector<AttachmentMode> parse_modes(std::string_view text) {
    std::vector<AttachmentMode> out;
    out.reserve(text.size());
    for (char c : text) {
        out.push_back(parse_mode_char(c));
    }
    return out;
}

WeightedGraph<ExactInt> build_chain_graph(const ChainSpec& spec) {
    spec.validate();
    WeightedGraph<ExactInt> g;
    std::array<VertexId, 6> hexagon{};
    VertexId anchor{};
    for (std::size_t i = 1; i <= spec.n; ++i) {
        const bool shares_anchor = spec.family == ChainFamily::Spiro && i > 1;
        for (std::size_t j = 0; j < 6; ++j) {
            hexagon[j] = (j == 0 && shares_anchor) ? anchor : g.add_vertex();
        }
        for (std::size_t j = 0; j < 6; ++j) {
            g.add_edge(hexagon[j], hexagon[(j + 1) % 6]);
        }
        if (spec.family == ChainFamily::Polyphenylene && i > 1) {
            g.add_edge(anchor, hexagon[0]);
        }
        if (i < spec.n) {
            // Hexagon i+1 attaches here; its mode is modes[i+1-3].
            anchor = i == 1 ? hexagon[0] : hexagon[static_cast<std::size_t>(distance(spec.modes[i - 2]))];
        }
    }
    return g;
}

ChainCount chain_stn(const ChainSpec& spec) {
    spec.validate();
    ChainCount out;
    out.total = 36;
    if (spec.n == 1) {
        return out;
    }
    const bool poly = spec.family == ChainFamily::Polyphenylene;
    out.anchored.reserve(spec.n - 1);
    out.anchored.emplace_back(21);
    for (std::size_t i = 2; i <= spec.n; ++i) {
        if (i >= 3) {
            const AttachmentMode m = spec.modes[i - 3];
            const ExactInt& prev = out.anchored.back();
            ExactInt next = (poly ? 21 : spiro_offset(m)) + pair_count(m) * prev;
            out.anchored.push_back(std::move(next));
        }
        const ExactInt& a = out.anchored.back();
        out.total += poly ? ExactInt(21 * a + 36) : ExactInt(20 * a + 15);
    }
    return out;
}

void ProbabilityPair::validate() const {
    if (p1 < 0 || p2 < 0) {
        throw PreconditionError("probabilities must be non-negative (p1=" + p1.get_str() + ", p2=" + p2.get_str() +
                                ")");
    }
    if (p1 + p2 > 1) {
        throw PreconditionError("p1 + p2 must not exceed 1 (p1=" + p1.get_str() + ", p2=" + p2.get_str() + ")");
    }
}

ExactRational ProbabilityPair::of(AttachmentMode m) const {
    switch (m) {
        case AttachmentMode::Ortho:
            return p1;
        case AttachmentMode::Meta:
            return p2;
        case AttachmentMode::Para:
            return para();
    }
    throw InternalError("bad attachment mode");
}

std::uint64_t SplitMix64::mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64::mix(seed ^ index);
}

namespace {

constexpr unsigned kDrawBits = 53;

// Smallest integer t with u < t  <=>  u < q * 2^53 for integer u.
std::uint64_t draw_threshold(const ExactRational& q) {
    ExactInt scaled = q.get_num();
    scaled <<= kDrawBits;
    ExactInt t;
    mpz_cdiv_q(t.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
    return static_cast<std::uint64_t>(t.get_ui());
}

}  // namespace

ChainSpec random_chain(ChainFamily family, std::size_t n, const ProbabilityPair& p, std::uint64_t seed) {
    p.validate();
    if (n < 1) {
        throw PreconditionError("a chain needs at least one hexagon");
    }
    const std::uint64_t ortho_below = draw_threshold(p.p1);
    const std::uint64_t meta_below = draw_threshold(ExactRational(p.p1 + p.p2));
    SplitMix64 rng(seed);
    ChainSpec spec{family, n, {}};
    for (std::size_t i = 3; i <= n; ++i) {
        const std::uint64_t u = rng.next() >> (64 - kDrawBits);
        spec.modes.push_back(u < ortho_below ? AttachmentMode::Ortho
                             : u < meta_below ? AttachmentMode::Meta
                                              : AttachmentMode::Para);
    }
    return spec;
}

std::size_t spec_count(std::size_t n, std::size_t cap) {
    if (n < 1) {
        throw PreconditionError("a chain needs at least one hexagon");
    }
    std::size_t count = 1;
    for (std::size_t i = 3; i <= n; ++i) {
        if (count > cap / 3) {
            throw CapExceededError("3^" + std::to_string(n - 2) + " chains exceed the enumeration cap of " +
                                   std::to_string(cap));
        }
        count *= 3;
    }
    if (count > cap) {
        throw CapExceededError("chain count exceeds the enumeration cap of " + std::to_string(cap));
    }
    return count;
}

void for_each_spec(ChainFamily family, std::size_t n, const std::function<void(const ChainSpec&)>& visit,
                   std::size_t cap) {
    const std::size_t count = spec_count(n, cap);
    const std::size_t steps = n > 2 ? n - 2 : 0;
    ChainSpec spec{family, n, std::vector<AttachmentMode>(steps, AttachmentMode::Ortho)};
    for (std::size_t k = 0; k < count; ++k) {
        visit(spec);
        // Odometer increment, last position fastest.
        for (std::size_t pos = steps; pos-- > 0;) {
            if (spec.modes[pos] != AttachmentMode::Para) {
                spec.modes[pos] = static_cast<AttachmentMode>(static_cast<int>(spec.modes[pos]) + 1);
                break;
            }
            spec.modes[pos] = AttachmentMode::Ortho;
        }
    }
}

std::vector<ChainSpec> enumerate_specs(ChainFamily family, std::size_t n, std::size_t cap) {
    std::vector<ChainSpec> out;
    for_each_spec(family, n, [&](const ChainSpec& s) { out.push_back(s); }, cap);
    return out;
}

}  // namespace stn
