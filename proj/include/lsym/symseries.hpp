#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "lsym/partition.hpp"
#include "lsym/ring.hpp"

namespace lsym {

/**
 * Degree-truncated symmetric power series over an Adams coefficient ring,
 * stored in the power-sum basis {p_tau}. Every stored partition has
 * weight <= degree_bound and no zero coefficients are kept.
 *
 * Truncation is eager: every operation drops terms above the bound, and
 * binary operations re-truncate to the smaller bound of the operands.
 * Values are immutable in spirit; all operations return fresh series.
 */
template <AdamsScalar C>
class SymSeries {
public:
    using Terms = std::map<Partition, C>;

    explicit SymSeries(int degree_bound) : bound_(check_bound(degree_bound)) {}

    SymSeries(int degree_bound, Terms terms) : bound_(check_bound(degree_bound)) {
        for (auto& [tau, c] : terms) set(tau, c);
    }

    static SymSeries zero(int degree_bound) { return SymSeries(degree_bound); }

    static SymSeries constant(int degree_bound, const C& c) {
        SymSeries s(degree_bound);
        s.set(Partition{}, c);
        return s;
    }

    static SymSeries one(int degree_bound) {
        return constant(degree_bound, ring_traits<C>::from_rational(1));
    }

    // The unit power sum p_tau (p_{} = 1).
    static SymSeries power_sum(const Partition& tau, int degree_bound) {
        SymSeries s(degree_bound);
        s.set(tau, ring_traits<C>::from_rational(1));
        return s;
    }

    int degree_bound() const { return bound_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Coefficient of p_tau.
    C coeff(const Partition& tau) const {
        auto it = terms_.find(tau);
        return it == terms_.end() ? C{} : it->second;
    }

    C constant_term() const { return coeff(Partition{}); }

    bool has_zero_constant_term() const { return constant_term() == C{}; }

    void set(const Partition& tau, const C& c) {
        if (tau.weight() > bound_) return;
        if (c == C{}) terms_.erase(tau); else terms_[tau] = c;
    }

    void add_to(const Partition& tau, const C& c) {
        if (tau.weight() > bound_) return;
        auto it = terms_.find(tau);
        if (it == terms_.end()) {
            if (!(c == C{})) terms_[tau] = c;
        } else {
            it->second = it->second + c;
            if (it->second == C{}) terms_.erase(it);
        }
    }

    SymSeries truncated(int new_bound) const {
        SymSeries s(new_bound);
        for (const auto& [tau, c] : terms_) s.set(tau, c);
        return s;
    }

    bool operator==(const SymSeries& other) const = default;

private:
    static int check_bound(int d) {
        if (d < 0) throw std::invalid_argument("degree bound must be >= 0");
        return d;
    }

    int bound_;
    Terms terms_;
};

template <AdamsScalar C>
SymSeries<C> operator+(const SymSeries<C>& f, const SymSeries<C>& g) {
    int d = std::min(f.degree_bound(), g.degree_bound());
    SymSeries<C> r = f.truncated(d);
    for (const auto& [tau, c] : g.terms()) r.add_to(tau, c);
    return r;
}

template <AdamsScalar C>
SymSeries<C> operator-(const SymSeries<C>& f) {
    SymSeries<C> r(f.degree_bound());
    for (const auto& [tau, c] : f.terms()) r.set(tau, -c);
    return r;
}

template <AdamsScalar C>
SymSeries<C> operator-(const SymSeries<C>& f, const SymSeries<C>& g) {
    return f + (-g);
}

// p_lambda * p_mu = p_{lambda u mu}: multiplication is index-union in the
// power-sum basis, with coefficient products in C.
template <AdamsScalar C>
SymSeries<C> operator*(const SymSeries<C>& f, const SymSeries<C>& g) {
    int d = std::min(f.degree_bound(), g.degree_bound());
    SymSeries<C> r(d);
    for (const auto& [a, ca] : f.terms()) {
        if (a.weight() > d) continue;
        for (const auto& [b, cb] : g.terms()) {
            if (a.weight() + b.weight() > d) continue;
            r.add_to(a.merged(b), ca * cb);
        }
    }
    return r;
}

template <AdamsScalar C>
SymSeries<C> scalar_mul(const C& c, const SymSeries<C>& f) {
    SymSeries<C> r(f.degree_bound());
    for (const auto& [tau, v] : f.terms()) r.set(tau, c * v);
    return r;
}

// Scalar multiplication by a rational, for any coefficient ring.
template <AdamsScalar C>
SymSeries<C> scalar_mul_q(const Rational& q, const SymSeries<C>& f) {
    C c = ring_traits<C>::from_rational(q);
    SymSeries<C> r(f.degree_bound());
    for (const auto& [tau, v] : f.terms()) r.set(tau, c * v);
    return r;
}

// Lifts a rational-coefficient series into any coefficient ring.
template <AdamsScalar C>
SymSeries<C> lift(const SymSeries<Rational>& f, int degree_bound) {
    SymSeries<C> r(degree_bound);
    for (const auto& [tau, q] : f.terms())
        r.set(tau, ring_traits<C>::from_rational(q));
    return r;
}

/**
 * Hall inner product, diagonal in the power-sum basis:
 * <p_lambda, p_mu> = delta z_lambda. Bilinear over the coefficient ring.
 */
template <AdamsScalar C>
C hall_inner(const SymSeries<C>& f, const SymSeries<C>& g) {
    C acc{};
    const auto& small = f.terms().size() <= g.terms().size() ? f.terms() : g.terms();
    const SymSeries<C>& other = f.terms().size() <= g.terms().size() ? g : f;
    for (const auto& [tau, c] : small) {
        C oc = other.coeff(tau);
        if (oc == C{}) continue;
        acc = acc + c * oc * ring_traits<C>::from_rational(Rational(tau.z_factor()));
    }
    return acc;
}

// omega: p_i -> (-1)^{i-1} p_i, so p_tau picks up (-1)^{|tau| - l(tau)}.
template <AdamsScalar C>
SymSeries<C> omega(const SymSeries<C>& f) {
    SymSeries<C> r(f.degree_bound());
    for (const auto& [tau, c] : f.terms())
        r.set(tau, ((tau.weight() - tau.length()) % 2 != 0) ? -c : c);
    return r;
}

// Degree flip: (-1)^d on the degree-d homogeneous component.
template <AdamsScalar C>
SymSeries<C> degree_flip(const SymSeries<C>& f) {
    SymSeries<C> r(f.degree_bound());
    for (const auto& [tau, c] : f.terms())
        r.set(tau, (tau.weight() % 2 != 0) ? -c : c);
    return r;
}

// omega-tilde = omega o degree_flip: p_i -> -p_i, i.e. (-1)^{l(tau)} on p_tau.
template <AdamsScalar C>
SymSeries<C> omega_tilde(const SymSeries<C>& f) {
    SymSeries<C> r(f.degree_bound());
    for (const auto& [tau, c] : f.terms())
        r.set(tau, (tau.length() % 2 != 0) ? -c : c);
    return r;
}

/**
 * Adams operation p_i o (-) on the series ring: indices are scaled
 * (tau -> i*tau) and coefficients pass through psi^i of the coefficient
 * ring. Terms pushed past the degree bound are dropped.
 */
template <AdamsScalar C>
SymSeries<C> plethysm_p(int i, const SymSeries<C>& f) {
    if (i < 1) throw std::invalid_argument("plethysm_p index must be >= 1");
    SymSeries<C> r(f.degree_bound());
    for (const auto& [tau, c] : f.terms()) {
        if (tau.weight() * i > f.degree_bound()) continue;
        r.add_to(tau.scaled(i), adams(i, c));
    }
    return r;
}

/**
 * General plethysm g o f for g with rational coefficients: expand g in
 * the p-basis and substitute p_i -> plethysm_p(i, f).
 *
 * If f has a nonzero constant term the substitution of a truncated g is
 * not meaningful (infinitely many degrees of g would contribute), so it
 * is rejected unless the caller asserts g is an honest polynomial.
 */
template <AdamsScalar C>
SymSeries<C> plethysm(const SymSeries<Rational>& g, const SymSeries<C>& f,
                      bool g_is_polynomial = false) {
    if (!f.has_zero_constant_term() && !g_is_polynomial)
        throw std::domain_error(
            "plethysm into a series with nonzero constant term requires a "
            "polynomial outer argument");
    int d = f.degree_bound();
    SymSeries<C> r(d);
    for (const auto& [tau, q] : g.terms()) {
        SymSeries<C> prod = SymSeries<C>::one(d);
        for (int part : tau.parts()) prod = prod * plethysm_p(part, f);
        r = r + scalar_mul_q(q, prod);
    }
    return r;
}

inline int moebius(int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            m = -m;
        }
    }
    if (n > 1) m = -m;
    return m;
}

namespace detail {

// Ordinary power-series exponential of a series with zero constant term.
template <AdamsScalar C>
SymSeries<C> series_exp(const SymSeries<C>& g) {
    int d = g.degree_bound();
    SymSeries<C> acc = SymSeries<C>::one(d);
    SymSeries<C> term = SymSeries<C>::one(d);
    for (int n = 1; n <= d; ++n) {
        term = scalar_mul_q(Rational(1, n), term * g);
        if (term.is_zero()) break;
        acc = acc + term;
    }
    return acc;
}

// Ordinary power-series logarithm of a series with constant term 1.
template <AdamsScalar C>
SymSeries<C> series_log(const SymSeries<C>& f) {
    int d = f.degree_bound();
    SymSeries<C> u = f - SymSeries<C>::one(d);
    SymSeries<C> acc(d);
    SymSeries<C> upow = SymSeries<C>::one(d);
    for (int n = 1; n <= d; ++n) {
        upow = upow * u;
        if (upow.is_zero()) break;
        Rational c(n % 2 ? 1 : -1, n);
        acc = acc + scalar_mul_q(c, upow);
    }
    return acc;
}

} // namespace detail

/**
 * The sigma-exponential Exp_sigma(f) = sum_n h_n o f for f with zero
 * constant term, computed as exp(sum_{i>=1} (p_i o f)/i).
 */
template <AdamsScalar C>
SymSeries<C> exp_sigma(const SymSeries<C>& f) {
    if (!f.has_zero_constant_term())
        throw std::domain_error("exp_sigma requires zero constant term");
    int d = f.degree_bound();
    SymSeries<C> g(d);
    for (int i = 1; i <= d; ++i)
        g = g + scalar_mul_q(Rational(1, i), plethysm_p(i, f));
    return detail::series_exp(g);
}

/**
 * Inverse of exp_sigma on series with constant term 1:
 * Log_sigma(f) = sum_{i>=1} (mu(i)/i) p_i o log(f).
 */
template <AdamsScalar C>
SymSeries<C> log_sigma(const SymSeries<C>& f) {
    if (!(f.constant_term() == ring_traits<C>::from_rational(1)))
        throw std::domain_error("log_sigma requires constant term 1");
    int d = f.degree_bound();
    SymSeries<C> l = detail::series_log(f);
    SymSeries<C> r(d);
    for (int i = 1; i <= d; ++i) {
        int mu = moebius(i);
        if (mu == 0) continue;
        r = r + scalar_mul_q(Rational(mu, i), plethysm_p(i, l));
    }
    return r;
}

/**
 * The power structure f^r for constant term 1, realized as
 * Exp_sigma(r * Log_sigma(f)); the exponent r enters through coefficient
 * multiplication, and its Adams images psi^i(r) appear via plethysm_p.
 */
template <AdamsScalar C>
SymSeries<C> pow_structure(const SymSeries<C>& f, const C& r) {
    return exp_sigma(scalar_mul(r, log_sigma(f)));
}

template <AdamsScalar C>
SymSeries<C> pow_structure_q(const SymSeries<C>& f, const Rational& r) {
    return exp_sigma(scalar_mul_q(r, log_sigma(f)));
}

} // namespace lsym
