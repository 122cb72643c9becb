#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lsym/basis.hpp"
#include "lsym/haar.hpp"
#include "lsym/multigraph.hpp"
#include "lsym/weyl.hpp"

namespace lsym {

enum class PowerKind { exterior, symmetric };

inline const char* power_kind_name(PowerKind k) {
    return k == PowerKind::exterior ? "exterior" : "symmetric";
}

inline PowerKind parse_power_kind(const std::string& s) {
    if (s == "ext" || s == "exterior" || s == "wedge") return PowerKind::exterior;
    if (s == "sym" || s == "symmetric") return PowerKind::symmetric;
    throw std::invalid_argument("unknown power kind '" + s + "'");
}

/**
 * Stable generating series for invariant dimensions:
 *   Exp_sigma(e_2) for (O, exterior) and (Sp, symmetric),
 *   Exp_sigma(h_2) for (Sp, exterior) and (O, symmetric).
 * For the exterior kind the m-coefficient at tau carries a (-1)^{|tau|}
 * relative to the dimension; the series is even, so the sign is inert.
 */
inline SymSeries<Rational> generating_series(Group group, PowerKind kind, int degree_bound) {
    bool use_e2 = (group == Group::O) == (kind == PowerKind::exterior);
    if (degree_bound < 2)
        return SymSeries<Rational>::one(degree_bound);
    auto gen = unit_basis_q(use_e2 ? Basis::e : Basis::h, Partition{2}, degree_bound);
    return exp_sigma(gen);
}

struct InvariantQuery {
    Group group = Group::O;
    int n = 1;
    Partition tau;
    PowerKind kind = PowerKind::exterior;
};

struct InvariantResult {
    std::int64_t dim = 0;
    bool stable = true; // false only for --unstable queries past the range
};

/**
 * dim of the G-invariants in wedge^tau V_n (exterior) or Sym^tau V_n
 * (symmetric), read off the stable generating series. Queries outside
 * the stability range weight(tau) <= n are rejected unless
 * allow_unstable is set, in which case the series coefficient is
 * returned but flagged: past the degree filtration the coefficient is
 * not a dimension.
 */
inline InvariantResult invariant_dim(const InvariantQuery& q, bool allow_unstable = false) {
    if (q.n < 1) throw std::domain_error("n must be >= 1");
    if (q.group == Group::Sp && q.n % 2 != 0)
        throw std::domain_error("Sp(n) requires even n");
    bool stable = q.tau.weight() <= q.n;
    if (!stable && !allow_unstable)
        throw std::domain_error(
            "query weight " + std::to_string(q.tau.weight()) + " exceeds n = " +
            std::to_string(q.n) + ": the generating series only controls "
            "coefficients inside the degree filtration (weight <= n)");
    auto series = generating_series(q.group, q.kind, q.tau.weight());
    Rational c = m_coefficient(series, q.tau);
    if (q.kind == PowerKind::exterior) {
        if (q.tau.weight() % 2 != 0 && c != 0)
            throw std::logic_error("odd-weight coefficient did not vanish");
        if (q.tau.weight() % 2 != 0) c = -c; // inert: c = 0 here
    }
    if (!is_integer(c) || c < 0)
        throw std::logic_error("non-integral or negative invariant dimension");
    return InvariantResult{numerator(c).convert_to<std::int64_t>(), stable};
}

inline std::int64_t invariant_dim(Group group, int n, const Partition& tau,
                                  PowerKind kind) {
    return invariant_dim(InvariantQuery{group, n, tau, kind}).dim;
}

// Both displayed duality equalities:
//   dim (wedge^tau C^n)^{O(n)}  = dim (Sym^tau C^n)^{Sp(n)}
//   dim (wedge^tau C^n)^{Sp(n)} = dim (Sym^tau C^n)^{O(n)}
inline bool duality_check(int n, const Partition& tau) {
    if (n % 2 != 0) throw std::domain_error("duality_check requires even n");
    return invariant_dim(Group::O, n, tau, PowerKind::exterior) ==
               invariant_dim(Group::Sp, n, tau, PowerKind::symmetric) &&
           invariant_dim(Group::Sp, n, tau, PowerKind::exterior) ==
               invariant_dim(Group::O, n, tau, PowerKind::symmetric);
}

struct CongruenceResult {
    bool holds = true;
    std::optional<Partition> offending;
    int checked_weight = 0; // depth of exact reference data used
};

/**
 * Checks the congruence between the exact finite-n moment series and the
 * stable generating series modulo the chosen filtration.
 *
 * The exact reference values come from the constant-term oracles
 * (weyl_ct_sp / weyl_ct_o), which are valid at any weight up to the
 * configured ceiling, stable or not.
 *
 * For the exterior kind the filtration is twisted by omega-tilde, so the
 * difference is pushed through omega_tilde before membership is tested;
 * for the symmetric kind the filtration applies directly.
 */
inline CongruenceResult congruence_check(Group group, PowerKind kind, int n,
                                         FiltrationKind filtration, int max_weight = 6) {
    if (n < 0) throw std::domain_error("n must be >= 0");
    CongruenceResult out;
    if (n == 0) return out; // empty stable range, vacuously true
    if (group == Group::Sp && n % 2 != 0)
        throw std::domain_error("Sp(n) requires even n");

    int depth = max_weight;
    out.checked_weight = depth;

    // exact finite-n moment series, m-coefficient at tau:
    //   exterior:  (-1)^{|tau|} dim (wedge^tau)^G
    //   symmetric: dim (Sym^tau)^G
    std::map<Partition, Rational> exact_m;
    for (const auto& tau : partitions_up_to(depth)) {
        std::int64_t d = group == Group::Sp
                             ? weyl_ct_sp(n, tau, kind == PowerKind::symmetric)
                             : weyl_ct_o(n, tau, kind == PowerKind::symmetric);
        Rational c(d);
        if (kind == PowerKind::exterior && tau.weight() % 2 != 0) c = -c;
        if (c != 0) exact_m[tau] = c;
    }
    auto exact_series = from_basis(Basis::m, exact_m, depth);
    auto diff = exact_series - generating_series(group, kind, depth);

    SymSeries<Rational> tested =
        kind == PowerKind::exterior ? omega_tilde(diff) : diff;
    auto viol = filtration_violation(tested, filtration, n);
    if (viol) {
        out.holds = false;
        out.offending = *viol;
    }
    return out;
}

struct CharPolyMoment {
    Rational via_dims;    // sum_j (-1)^j (lambda j)^r dim (wedge^j C^n)^{Sp(n)}
    Rational closed_form; // sum_{0 <= j even <= n} (j lambda)^r
    bool consistent() const { return via_dims == closed_form; }
};

/**
 * Haar integral over Sp(n) of the r-th derivative at s = 0 of
 * P_M(exp(lambda s)) for P_M(t) = det(Id - t M), along two routes.
 */
inline CharPolyMoment char_poly_derivative_moment(int n, int r, const Rational& lambda) {
    if (n < 2 || n % 2 != 0) throw std::domain_error("requires positive even n");
    if (r < 0) throw std::domain_error("derivative order must be >= 0");
    CharPolyMoment out{Rational(0), Rational(0)};
    auto jr = [&](int j) { // (lambda j)^r with 0^0 = 1
        if (r == 0) return Rational(1);
        return pow_rational(lambda * j, static_cast<unsigned>(r));
    };
    for (int j = 0; j <= n; ++j) {
        std::int64_t d = invariant_dim(Group::Sp, n, Partition{j}, PowerKind::exterior);
        Rational term = jr(j) * d;
        out.via_dims += (j % 2 == 0) ? term : -term;
        if (j % 2 == 0) out.closed_form += jr(j);
    }
    return out;
}

} // namespace lsym
