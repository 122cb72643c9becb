#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsym/laurent.hpp"
#include "lsym/symseries.hpp"

namespace lsym {

enum class Basis { m, e, h, p, s };

inline char basis_char(Basis b) {
    switch (b) {
        case Basis::m: return 'm';
        case Basis::e: return 'e';
        case Basis::h: return 'h';
        case Basis::p: return 'p';
        case Basis::s: return 's';
    }
    throw std::logic_error("bad basis tag");
}

inline Basis parse_basis(const std::string& s) {
    if (s.size() == 1) {
        switch (s[0]) {
            case 'm': return Basis::m;
            case 'e': return Basis::e;
            case 'h': return Basis::h;
            case 'p': return Basis::p;
            case 's': return Basis::s;
        }
    }
    throw std::invalid_argument("unknown basis '" + s + "' (expected m|e|h|p|s)");
}

// Rational p-basis expansion of a single symmetric function.
using PExpansion = std::map<Partition, Rational>;

namespace detail {

inline PExpansion pexp_mul(const PExpansion& a, const PExpansion& b) {
    PExpansion r;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b) {
            Rational& slot = r[la.merged(lb)];
            slot += ca * cb;
            if (slot == 0) r.erase(la.merged(lb));
        }
    return r;
}

inline PExpansion pexp_add(const PExpansion& a, const PExpansion& b) {
    PExpansion r = a;
    for (const auto& [l, c] : b) {
        Rational& slot = r[l];
        slot += c;
        if (slot == 0) r.erase(l);
    }
    return r;
}

// h_n = sum_{lambda |- n} p_lambda / z_lambda
inline PExpansion h_n_to_p(int n) {
    PExpansion r;
    for (const auto& lam : partitions_of(n)) r[lam] = Rational(1, lam.z_factor());
    return r;
}

// e_n = sum_{lambda |- n} (-1)^{n - l(lambda)} p_lambda / z_lambda
inline PExpansion e_n_to_p(int n) {
    PExpansion r;
    for (const auto& lam : partitions_of(n)) {
        Rational c(1, lam.z_factor());
        if ((n - lam.length()) % 2 != 0) c = -c;
        r[lam] = c;
    }
    return r;
}

inline int multiplicity_of(const Partition& nu, int v) {
    int m = 0;
    for (int p : nu.parts()) m += (p == v);
    return m;
}

// Monomial-basis expansion multiplied by p_r:
// m_mu * p_r = sum_nu c_nu m_nu, where nu is mu with r added to one
// distinct part value (or with a new part r appended) and c_nu is the
// multiplicity in nu of the increased part.
inline std::map<Partition, Rational> mexp_mul_p(
    const std::map<Partition, Rational>& f, int r) {
    std::map<Partition, Rational> out;
    auto add = [&](const Partition& nu, const Rational& c) {
        Rational& slot = out[nu];
        slot += c;
        if (slot == 0) out.erase(nu);
    };
    for (const auto& [mu, c] : f) {
        std::vector<int> seen;
        for (std::size_t i = 0; i < mu.parts().size(); ++i) {
            int v = mu.parts()[i];
            if (i > 0 && mu.parts()[i - 1] == v) continue; // one per distinct value
            std::vector<int> parts = mu.parts();
            parts[i] += r;
            Partition nu(std::move(parts));
            add(nu, c * multiplicity_of(nu, v + r));
        }
        std::vector<int> parts = mu.parts();
        parts.push_back(r);
        Partition nu(std::move(parts));
        add(nu, c * multiplicity_of(nu, r));
    }
    return out;
}

struct TransitionTables {
    std::mutex mu;
    std::map<Partition, PExpansion> h_tau, e_tau, s_tau, m_tau;
    std::map<Partition, std::map<Partition, Rational>> p_in_m;
    std::map<int, bool> m_degree_done;
};

inline TransitionTables& tables() {
    static TransitionTables t;
    return t;
}

inline PExpansion h_tau_to_p_unlocked(const Partition& tau,
                                      std::map<Partition, PExpansion>& cache) {
    auto it = cache.find(tau);
    if (it != cache.end()) return it->second;
    PExpansion r{{Partition{}, Rational(1)}};
    for (int part : tau.parts()) r = pexp_mul(r, h_n_to_p(part));
    cache[tau] = r;
    return r;
}

inline PExpansion e_tau_to_p_unlocked(const Partition& tau,
                                      std::map<Partition, PExpansion>& cache) {
    auto it = cache.find(tau);
    if (it != cache.end()) return it->second;
    PExpansion r{{Partition{}, Rational(1)}};
    for (int part : tau.parts()) r = pexp_mul(r, e_n_to_p(part));
    cache[tau] = r;
    return r;
}

// Monomial-basis expansion of p_lambda, built by repeated multiplication.
inline std::map<Partition, Rational> p_to_m_unlocked(
    const Partition& lam, std::map<Partition, std::map<Partition, Rational>>& cache) {
    auto it = cache.find(lam);
    if (it != cache.end()) return it->second;
    std::map<Partition, Rational> r{{Partition{}, Rational(1)}};
    for (int part : lam.parts()) r = mexp_mul_p(r, part);
    cache[lam] = r;
    return r;
}

// Solves for the p-expansions of all m_tau with |tau| = d at once by
// inverting the degree-d block of the p -> m transition matrix.
inline void build_m_degree_unlocked(int d, TransitionTables& t) {
    if (t.m_degree_done[d]) return;
    auto sigmas = partitions_of(d);
    int n = static_cast<int>(sigmas.size());
    // A[row mu][col sigma] = coefficient of m_mu in p_sigma
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
    for (int j = 0; j < n; ++j) {
        auto col = p_to_m_unlocked(sigmas[j], t.p_in_m);
        for (int i = 0; i < n; ++i) {
            auto it = col.find(sigmas[i]);
            if (it != col.end()) a[i][j] = it->second;
        }
    }
    for (int i = 0; i < n; ++i) a[i][n + i] = 1;
    // Gauss-Jordan
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw std::logic_error("singular p->m transition block");
        std::swap(a[piv], a[col]);
        Rational inv = Rational(1) / a[col][col];
        for (int c = 0; c < 2 * n; ++c) a[col][c] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (int c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    // column tau of the inverse gives m_tau in the p-basis
    for (int j = 0; j < n; ++j) {
        PExpansion exp;
        for (int i = 0; i < n; ++i)
            if (a[i][n + j] != 0) exp[sigmas[i]] = a[i][n + j];
        t.m_tau[sigmas[j]] = exp;
    }
    t.m_degree_done[d] = true;
}

// Jacobi-Trudi: s_tau = det(h_{tau_i + j - i}), expanded by Laplace along
// columns with memoization on the remaining row set.
inline PExpansion s_tau_to_p_unlocked(const Partition& tau, TransitionTables& t) {
    auto it = t.s_tau.find(tau);
    if (it != t.s_tau.end()) return it->second;
    int l = tau.length();
    if (l == 0) {
        PExpansion one{{Partition{}, Rational(1)}};
        t.s_tau[tau] = one;
        return one;
    }
    auto entry = [&](int i, int j) -> PExpansion { // 0-based
        int k = tau.parts()[static_cast<std::size_t>(i)] + j - i;
        if (k < 0) return {};
        if (k == 0) return {{Partition{}, Rational(1)}};
        return h_tau_to_p_unlocked(Partition{k}, t.h_tau);
    };
    std::map<std::uint32_t, PExpansion> memo;
    std::function<PExpansion(std::uint32_t)> det = [&](std::uint32_t mask) -> PExpansion {
        if (mask == 0) return {{Partition{}, Rational(1)}};
        auto mit = memo.find(mask);
        if (mit != memo.end()) return mit->second;
        int j = l - std::popcount(mask); // next column to expand
        PExpansion acc;
        int sign = 1;
        for (int i = 0; i < l; ++i) {
            if (!(mask & (1u << i))) continue;
            PExpansion e = entry(i, j);
            if (!e.empty()) {
                PExpansion sub = det(mask & ~(1u << i));
                PExpansion prod = pexp_mul(e, sub);
                if (sign < 0)
                    for (auto& [p, c] : prod) c = -c;
                acc = pexp_add(acc, prod);
            }
            sign = -sign;
        }
        memo[mask] = acc;
        return acc;
    };
    PExpansion r = det((1u << l) - 1u);
    t.s_tau[tau] = r;
    return r;
}

} // namespace detail

// Exact p-basis expansion of the basis element b_tau.
inline PExpansion basis_to_p(Basis b, const Partition& tau) {
    auto& t = detail::tables();
    std::lock_guard<std::mutex> lock(t.mu);
    switch (b) {
        case Basis::p: return PExpansion{{tau, Rational(1)}};
        case Basis::h: return detail::h_tau_to_p_unlocked(tau, t.h_tau);
        case Basis::e: return detail::e_tau_to_p_unlocked(tau, t.e_tau);
        case Basis::s: return detail::s_tau_to_p_unlocked(tau, t);
        case Basis::m: {
            detail::build_m_degree_unlocked(tau.weight(), t);
            return t.m_tau.at(tau);
        }
    }
    throw std::logic_error("bad basis tag");
}

template <AdamsScalar C>
SymSeries<C> unit_basis_element(Basis b, const Partition& tau, int degree_bound) {
    if (tau.weight() > degree_bound)
        throw std::domain_error("basis element weight " + std::to_string(tau.weight()) +
                                " exceeds degree bound " + std::to_string(degree_bound));
    SymSeries<C> r(degree_bound);
    for (const auto& [lam, q] : basis_to_p(b, tau))
        r.set(lam, ring_traits<C>::from_rational(q));
    return r;
}

inline SymSeries<Rational> unit_basis_q(Basis b, const Partition& tau, int degree_bound) {
    return unit_basis_element<Rational>(b, tau, degree_bound);
}

/**
 * Exact coefficients of f in basis b up to its degree bound, extracted
 * through the Hall pairing against the dual basis:
 *   m-coefficients pair with h_tau, h with m_tau, e with m_tau after
 *   omega, s with s_tau (orthonormal), p with p_tau / z_tau.
 */
template <AdamsScalar C>
std::map<Partition, C> to_basis(const SymSeries<C>& f, Basis b) {
    std::map<Partition, C> out;
    const SymSeries<C>* src = &f;
    SymSeries<C> wf(0);
    Basis dual = Basis::h;
    switch (b) {
        case Basis::p: {
            for (const auto& [tau, c] : f.terms()) out[tau] = c;
            return out;
        }
        case Basis::m: dual = Basis::h; break;
        case Basis::h: dual = Basis::m; break;
        case Basis::s: dual = Basis::s; break;
        case Basis::e:
            wf = omega(f);
            src = &wf;
            dual = Basis::m;
            break;
    }
    for (const auto& tau : partitions_up_to(f.degree_bound())) {
        C c{};
        for (const auto& [lam, q] : basis_to_p(dual, tau)) {
            C fc = src->coeff(lam);
            if (fc == C{}) continue;
            c = c + fc * ring_traits<C>::from_rational(q * lam.z_factor());
        }
        if (!(c == C{})) out[tau] = c;
    }
    return out;
}

template <AdamsScalar C>
SymSeries<C> from_basis(Basis b, const std::map<Partition, C>& coeffs, int degree_bound) {
    SymSeries<C> r(degree_bound);
    for (const auto& [tau, c] : coeffs) {
        if (tau.weight() > degree_bound) continue;
        for (const auto& [lam, q] : basis_to_p(b, tau))
            r.add_to(lam, c * ring_traits<C>::from_rational(q));
    }
    return r;
}

// Coefficient of m_tau in f (= <f, h_tau> by <m_tau, h_sigma> = delta).
template <AdamsScalar C>
C m_coefficient(const SymSeries<C>& f, const Partition& tau) {
    C c{};
    for (const auto& [lam, q] : basis_to_p(Basis::h, tau)) {
        C fc = f.coeff(lam);
        if (fc == C{}) continue;
        c = c + fc * ring_traits<C>::from_rational(q * lam.z_factor());
    }
    return c;
}

/**
 * Specialization to a finite alphabet t1..tk (nonnegative exponents):
 * p_i -> t1^i + ... + tk^i. The coefficient of t^tau equals the m-basis
 * coefficient of tau whenever length(tau) <= k.
 */
inline LaurentScalar expand_in_variables(const SymSeries<Rational>& f, int k,
                                         const std::string& stem = "t") {
    if (k < 1) throw std::invalid_argument("variable count must be >= 1");
    std::vector<std::string> names;
    for (int i = 1; i <= k; ++i) names.push_back(stem + std::to_string(i));
    auto power_sum = [&](int i) {
        LaurentScalar s;
        for (const auto& n : names) s += LaurentScalar::variable(n, i);
        return s;
    };
    LaurentScalar out;
    for (const auto& [tau, q] : f.terms()) {
        LaurentScalar term(q);
        for (int part : tau.parts()) term *= power_sum(part);
        out += term;
    }
    return out;
}

enum class FiltrationKind { degree, mult_distinct, mult_length };

inline FiltrationKind parse_filtration(const std::string& s) {
    if (s == "degree") return FiltrationKind::degree;
    if (s == "mult-distinct") return FiltrationKind::mult_distinct;
    if (s == "mult-length") return FiltrationKind::mult_length;
    throw std::invalid_argument("unknown filtration '" + s + "'");
}

inline int filtration_statistic(FiltrationKind kind, const Partition& tau) {
    switch (kind) {
        case FiltrationKind::degree: return tau.weight();
        case FiltrationKind::mult_distinct: return tau.distinct_entries();
        case FiltrationKind::mult_length: return tau.length();
    }
    throw std::logic_error("bad filtration kind");
}

// True iff every nonzero m-basis coefficient of f sits at a partition with
// the chosen statistic strictly greater than n.
template <AdamsScalar C>
bool filtration_check(const SymSeries<C>& f, FiltrationKind kind, int n) {
    for (const auto& [tau, c] : to_basis(f, Basis::m))
        if (filtration_statistic(kind, tau) <= n) return false;
    return true;
}

// First m-basis support partition violating the filtration, if any.
template <AdamsScalar C>
std::optional<Partition> filtration_violation(const SymSeries<C>& f,
                                              FiltrationKind kind, int n) {
    for (const auto& [tau, c] : to_basis(f, Basis::m))
        if (filtration_statistic(kind, tau) <= n) return tau;
    return std::nullopt;
}

} // namespace lsym
