#pragma once

#include <optional>
#include <vector>

#include "lsym/basis.hpp"
#include "lsym/symseries.hpp"

namespace lsym {

/**
 * Finitely supported pre-lambda random variable: a probability-weighted
 * family of values in one Adams coefficient ring. Expectation is the
 * literal weighted sum, which is enough to exercise every in-scope
 * identity at full strength with exact arithmetic.
 */
template <AdamsScalar C>
struct RandomVariable {
    struct Outcome {
        Rational prob;
        C value;
    };

    std::vector<Outcome> outcomes;

    void validate() const {
        Rational total = 0;
        for (const auto& o : outcomes) {
            if (o.prob < 0) throw std::domain_error("negative probability");
            total += o.prob;
        }
        if (total != 1) throw std::domain_error("probabilities must sum to 1");
    }

    static RandomVariable deterministic(const C& value) {
        return RandomVariable{{Outcome{Rational(1), value}}};
    }
};

template <AdamsScalar C>
C expectation(const RandomVariable<C>& x) {
    C acc{};
    for (const auto& o : x.outcomes)
        acc = acc + ring_traits<C>::from_rational(o.prob) * o.value;
    return acc;
}

// Evaluates a symmetric function (given by its p-basis expansion) at a
// scalar: p_lambda -> prod_i psi^{lambda_i}(v).
template <AdamsScalar C>
C eval_p_expansion_at(const PExpansion& f, const C& v) {
    C acc{};
    for (const auto& [lam, q] : f) {
        C prod = ring_traits<C>::from_rational(q);
        for (int part : lam.parts()) prod = prod * adams(part, v);
        acc = acc + prod;
    }
    return acc;
}

// E[b_tau o X] for b in {e, h, s}: plethysm in each outcome, then the
// weighted sum.
template <AdamsScalar C>
C plethysm_moment(const RandomVariable<C>& x, Basis b, const Partition& tau) {
    const PExpansion exp = basis_to_p(b, tau);
    C acc{};
    for (const auto& o : x.outcomes)
        acc = acc + ring_traits<C>::from_rational(o.prob) *
                        eval_p_expansion_at(exp, o.value);
    return acc;
}

/**
 * The sigma-moment generating function E[Exp_sigma(X h_1)] up to degree D:
 * the m-basis coefficient at tau is E[h_tau o X], constant term 1.
 */
template <AdamsScalar C>
SymSeries<C> sigma_mgf(const RandomVariable<C>& x, int degree_bound) {
    std::map<Partition, C> m_coeffs;
    for (const auto& tau : partitions_up_to(degree_bound))
        m_coeffs[tau] = plethysm_moment(x, Basis::h, tau);
    return from_basis(Basis::m, m_coeffs, degree_bound);
}

/**
 * E[Exp_sigma(-X h_1)] computed directly from lambda-moments:
 * the m-basis coefficient at tau is (-1)^{|tau|} E[e_tau o X].
 */
template <AdamsScalar C>
SymSeries<C> neg_sigma_mgf_direct(const RandomVariable<C>& x, int degree_bound) {
    std::map<Partition, C> m_coeffs;
    for (const auto& tau : partitions_up_to(degree_bound)) {
        C c = plethysm_moment(x, Basis::e, tau);
        m_coeffs[tau] = (tau.weight() % 2 != 0) ? -c : c;
    }
    return from_basis(Basis::m, m_coeffs, degree_bound);
}

/**
 * E[b_tau o X] along both routes: the direct plethysm expectation and the
 * Hall-pairing extraction <E[Exp_sigma(X h_1)], b_tau>. The two must
 * agree; a mismatch signals an internal inconsistency.
 */
template <AdamsScalar C>
struct MomentPair {
    C direct;
    C via_pairing;
    bool consistent() const { return direct == via_pairing; }
};

template <AdamsScalar C>
MomentPair<C> lambda_moment(const RandomVariable<C>& x, const Partition& tau, Basis b) {
    if (b != Basis::e && b != Basis::h && b != Basis::s)
        throw std::invalid_argument("lambda_moment supports bases e, h, s");
    MomentPair<C> r;
    r.direct = plethysm_moment(x, b, tau);
    SymSeries<C> mgf = sigma_mgf(x, tau.weight());
    SymSeries<C> btau = unit_basis_element<C>(b, tau, tau.weight());
    r.via_pairing = hall_inner(mgf, btau);
    return r;
}

// Outcome of the negation identity check, with a diagnostic naming the
// first differing m-basis coefficient on failure.
template <AdamsScalar C>
struct NegationCheck {
    bool ok = false;
    std::optional<Partition> first_diff;
    C lhs{}; // omega_tilde(sigma_mgf) m-coefficient at first_diff
    C rhs{}; // direct negative mgf m-coefficient at first_diff
};

// Checks E[Exp_sigma(-X h_1)] = omega_tilde(E[Exp_sigma(X h_1)]) exactly.
template <AdamsScalar C>
NegationCheck<C> theorem_negation_check(const RandomVariable<C>& x, int degree_bound) {
    SymSeries<C> via_involution = omega_tilde(sigma_mgf(x, degree_bound));
    SymSeries<C> direct = neg_sigma_mgf_direct(x, degree_bound);
    NegationCheck<C> r;
    if (via_involution == direct) {
        r.ok = true;
        return r;
    }
    auto lhs_m = to_basis(via_involution, Basis::m);
    auto rhs_m = to_basis(direct, Basis::m);
    for (const auto& tau : partitions_up_to(degree_bound)) {
        C a = lhs_m.count(tau) ? lhs_m.at(tau) : C{};
        C b = rhs_m.count(tau) ? rhs_m.at(tau) : C{};
        if (!(a == b)) {
            r.first_diff = tau;
            r.lhs = a;
            r.rhs = b;
            break;
        }
    }
    return r;
}

} // namespace lsym
