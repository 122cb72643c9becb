#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lsym {

// Exact rational scalar. Arbitrary precision, always in lowest terms with
// positive denominator (the backend canonicalizes on every operation).
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Parses "a" or "a/b" with optional leading sign.
inline Rational parse_rational(const std::string& s) {
    try {
        if (s.empty()) throw std::invalid_argument("empty");
        Rational q(s);
        return q;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline Rational pow_rational(const Rational& base, unsigned e) {
    Rational r = 1;
    Rational b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

} // namespace lsym
