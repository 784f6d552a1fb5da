#include "stn/ring.hpp"

#include <cctype>
#include <cstdlib>
#include <memory>

namespace stn {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace

ExactInt RingTraits<ExactInt>::from_rational(const ExactRational& q) {
    if (!is_integral(q)) {
        throw PreconditionError("value " + q.get_str() + " is not an integer");
    }
    return q.get_num();
}

ExactRational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("invalid rational '" + std::string(text) + "'");
    }
    ExactInt n(std::string(num), 10);
    ExactInt d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    ExactRational q(negative ? ExactInt(-n) : n, d);
    q.canonicalize();
    return q;
}

ExactInt parse_integer(std::string_view text) {
    ExactRational q = parse_rational(text);
    if (!is_integral(q)) {
        throw ParseError("expected an integer, got '" + std::string(text) + "'");
    }
    return q.get_num();
}

bool is_integral(const ExactRational& q) {
    return q.get_den() == 1;
}

std::string exact_string(const ExactRational& q) {
    return q.get_str();
}

std::string decimal_string(const ExactRational& q, int digits) {
    if (q == 0) {
        return "0";
    }
    if (digits < 1) {
        digits = 1;
    }
    mpf_class f(0, static_cast<mp_bitcnt_t>(digits) * 4 + 64);
    f = q;
    mp_exp_t exp = 0;
    std::unique_ptr<char, void (*)(void*)> raw(
        mpf_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), f.get_mpf_t()), std::free);
    std::string mant(raw.get());
    std::string sign;
    if (!mant.empty() && mant.front() == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    // mpf_get_str strips trailing zeros; value is 0.mant * 10^exp.
    std::string out = sign + mant.substr(0, 1);
    if (mant.size() > 1) {
        out += "." + mant.substr(1);
    }
    long e10 = static_cast<long>(exp) - 1;
    out += (e10 < 0 ? "e-" : "e+");
    std::string es = std::to_string(e10 < 0 ? -e10 : e10);
    if (es.size() < 2) {
        es.insert(0, "0");
    }
    return out + es;
}

double to_double(const ExactRational& q) {
    return std::strtod(decimal_string(q, 20).c_str(), nullptr);
}

ExactRational pow(const ExactRational& base, unsigned long exponent) {
    ExactInt num;
    ExactInt den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    ExactRational out(num, den);
    out.canonicalize();
    return out;
}

}  // namespace stn
