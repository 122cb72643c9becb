#pragma once

#include <concepts>
#include <string>

#include "lsym/laurent.hpp"
#include "lsym/rational.hpp"

namespace lsym {

// psi^i on rationals is the identity (binomial lambda-structure on Z c Q).
inline Rational adams(int i, const Rational& r) {
    if (i < 1) throw std::invalid_argument("adams index must be >= 1");
    return r;
}

inline LaurentScalar adams(int i, const LaurentScalar& x) { return x.adams(i); }

/**
 * Coefficient-ring glue used by the series engine: embedding of Q,
 * string rendering, and parsing. All supported rings are torsion-free
 * and their Adams operations are ring homomorphisms.
 */
template <class C>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational from_rational(const Rational& q) { return q; }
    static std::string to_string(const Rational& c) { return lsym::to_string(c); }
    static Rational parse(const std::string& s) { return parse_rational(s); }
    static const char* name() { return "Q"; }
};

template <>
struct ring_traits<LaurentScalar> {
    static LaurentScalar from_rational(const Rational& q) { return LaurentScalar(q); }
    static std::string to_string(const LaurentScalar& c) { return c.str(); }
    static LaurentScalar parse(const std::string& s) { return parse_laurent(s); }
    static const char* name() { return "laurent"; }
};

// Exact coefficient ring with Adams operations psi^i.
template <class C>
concept AdamsScalar = requires(const C& a, const C& b, int i, const Rational& q) {
    C{};
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { -a } -> std::convertible_to<C>;
    { a == b } -> std::convertible_to<bool>;
    { adams(i, a) } -> std::convertible_to<C>;
    { ring_traits<C>::from_rational(q) } -> std::convertible_to<C>;
    { ring_traits<C>::to_string(a) } -> std::convertible_to<std::string>;
};

static_assert(AdamsScalar<Rational>);
static_assert(AdamsScalar<LaurentScalar>);

} // namespace lsym
