#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "stn/errors.hpp"

namespace stn {

/// Arbitrary-precision integer weight/count type.
using ExactInt = mpz_class;
/// Arbitrary-precision rational, always kept in canonical (reduced) form.
using ExactRational = mpq_class;

template <class R>
struct RingTraits;

template <>
struct RingTraits<ExactInt> {
    static ExactInt zero() { return ExactInt(0); }
    static ExactInt one() { return ExactInt(1); }
    static std::string to_string(const ExactInt& x) { return x.get_str(); }
    static ExactInt from_rational(const ExactRational& q);
};

template <>
struct RingTraits<ExactRational> {
    static ExactRational zero() { return ExactRational(0); }
    static ExactRational one() { return ExactRational(1); }
    static std::string to_string(const ExactRational& x) { return x.get_str(); }
    static ExactRational from_rational(const ExactRational& q) { return q; }
};

// A commutative ring with unit. gmpxx returns expression templates from the
// operators, so results are only required to convert back to R.
template <class R>
concept CommutativeRing = std::regular<R> && requires(const R& a, const R& b) {
    { RingTraits<R>::zero() } -> std::convertible_to<R>;
    { RingTraits<R>::one() } -> std::convertible_to<R>;
    { a + b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { RingTraits<R>::to_string(a) } -> std::convertible_to<std::string>;
};

static_assert(CommutativeRing<ExactInt>);
static_assert(CommutativeRing<ExactRational>);

template <CommutativeRing R>
R ring_zero() {
    return RingTraits<R>::zero();
}

template <CommutativeRing R>
R ring_one() {
    return RingTraits<R>::one();
}

/// Parses `a`, `-a`, `a/b` (decimal integers). Throws ParseError on anything
/// else, including a zero denominator.
ExactRational parse_rational(std::string_view text);

/// Parses an integer or an integral rational such as `6/3`.
ExactInt parse_integer(std::string_view text);

bool is_integral(const ExactRational& q);

/// Lossless `a/b` (or `a` when integral).
std::string exact_string(const ExactRational& q);

/// Decimal approximation in scientific notation with `digits` significant
/// digits. Works for magnitudes far outside the double range.
std::string decimal_string(const ExactRational& q, int digits = 17);

/// Nearest double; overflows to +-inf for huge magnitudes.
double to_double(const ExactRational& q);

ExactRational pow(const ExactRational& base, unsigned long exponent);

}  // namespace stn
