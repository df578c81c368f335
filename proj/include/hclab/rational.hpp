#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "hclab/errors.hpp"

namespace hclab {

// Exact arithmetic carrier for fugacities, weights and probabilities.
// cpp_rational keeps values in lowest terms with a positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

// "p/q" when q != 1, otherwise just "p".
inline std::string to_string(const Rational& r) { return r.str(); }

inline std::string to_string(const BigInt& n) { return n.str(); }

// Accepts "p", "-p", "p/q" with big-integer parts.
inline Rational parse_rational(std::string_view text) {
    const std::string s(text);
    if (s.empty()) throw ParseError("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty()) throw ParseError("malformed rational '" + s + "'");
        BigInt q(den);
        if (q == 0) throw DomainError("zero denominator in '" + s + "'");
        return Rational(BigInt(num), q);
    } catch (const std::runtime_error& e) {
        throw ParseError("malformed rational '" + s + "': " + e.what());
    }
}

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline Rational pow_rational(const Rational& base, unsigned exp) {
    Rational out = 1;
    Rational b = base;
    for (unsigned e = exp; e != 0; e >>= 1) {
        if (e & 1u) out *= b;
        if (e > 1) b *= b;
    }
    return out;
}

// Natural log of a positive rational, robust to values far outside double range.
inline double log_rational(const Rational& r) {
    if (r <= 0) throw DomainError("log of non-positive rational");
    const auto log_big = [](const BigInt& n) {
        const long bits = static_cast<long>(boost::multiprecision::msb(n));
        if (bits <= 900) return std::log(n.template convert_to<double>());
        const BigInt top = n >> (bits - 52);
        return std::log(top.template convert_to<double>()) + (bits - 52) * std::log(2.0);
    };
    return log_big(numerator_of(r)) - log_big(denominator_of(r));
}

// Smallest rational with the given denominator that is >= x, plus one extra
// grid step to absorb floating-point error in x itself. Used to turn real
// optimizer output into certificates that are safe to verify exactly.
inline Rational round_up_rational(double x, const BigInt& denominator = BigInt(1000000000000LL)) {
    if (!std::isfinite(x)) throw DomainError("cannot round non-finite value");
    const double scaled = x * denominator.template convert_to<double>();
    BigInt floor_part(static_cast<long long>(std::floor(scaled)));
    while (Rational(floor_part, denominator) < Rational(0)) ++floor_part;  // keep certificates positive-safe
    Rational out(floor_part + 2, denominator);
    while (to_double(out) < x) out += Rational(1, denominator);
    return out;
}

}  // namespace hclab
