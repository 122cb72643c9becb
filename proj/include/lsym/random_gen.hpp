#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lsym/prob.hpp"

namespace lsym {

/**
 * Deterministic generators for randomized identity checks: Laurent
 * values of bounded support, finitely supported random variables, and
 * series with bounded p-basis support. Everything is driven by a
 * mt19937_64 so a (seed, trial) pair reproduces exactly.
 */
struct RandomGen {
    std::mt19937_64 rng;

    explicit RandomGen(std::uint64_t seed) : rng(seed) {}

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    Rational small_rational(int max_abs = 3) {
        int num = uniform(-max_abs, max_abs);
        int den = uniform(1, 2);
        return Rational(num, den);
    }

    // Laurent value with <= max_terms monomials of total degree <= max_degree.
    LaurentScalar laurent(const std::vector<std::string>& vars, int max_terms = 3,
                          int max_degree = 2) {
        LaurentScalar out;
        int terms = uniform(1, max_terms);
        for (int t = 0; t < terms; ++t) {
            LaurentScalar::Monomial m;
            int budget = max_degree;
            for (const auto& v : vars) {
                int e = uniform(0, budget);
                budget -= e;
                if (e != 0) m[v] = e;
            }
            Rational c = small_rational();
            if (c == 0) c = 1;
            out += LaurentScalar::monomial(std::move(m), c);
        }
        return out;
    }

    // Random variable with <= max_outcomes outcomes and exact rational
    // probabilities summing to 1.
    RandomVariable<LaurentScalar> random_variable(const std::vector<std::string>& vars,
                                                  int max_outcomes = 4) {
        int k = uniform(1, max_outcomes);
        std::vector<int> weights(static_cast<std::size_t>(k));
        int total = 0;
        for (auto& w : weights) {
            w = uniform(1, 5);
            total += w;
        }
        RandomVariable<LaurentScalar> x;
        for (int i = 0; i < k; ++i)
            x.outcomes.push_back({Rational(weights[static_cast<std::size_t>(i)], total),
                                  laurent(vars)});
        x.validate();
        return x;
    }

    // Random series with bounded p-basis support; Fil^1 when requested.
    template <AdamsScalar C>
    SymSeries<C> series(int degree_bound, int max_terms,
                        const std::function<C()>& coeff_gen, bool fil1 = false) {
        SymSeries<C> f(degree_bound);
        auto pool = partitions_up_to(degree_bound);
        int terms = uniform(1, max_terms);
        for (int t = 0; t < terms; ++t) {
            const Partition& tau =
                pool[static_cast<std::size_t>(uniform(0, static_cast<int>(pool.size()) - 1))];
            if (fil1 && tau.empty()) continue;
            f.add_to(tau, coeff_gen());
        }
        return f;
    }

    SymSeries<LaurentScalar> laurent_series(const std::vector<std::string>& vars,
                                            int degree_bound, int max_terms = 6,
                                            bool fil1 = false) {
        return series<LaurentScalar>(
            degree_bound, max_terms, [&]() { return laurent(vars, 2, 2); }, fil1);
    }
};

// Outcome of a randomized run of the negation identity.
struct TheoremTrialReport {
    int trials = 0;
    int counterexamples = 0;
    std::string first_failure; // serialized diagnostic, empty when clean
};

/**
 * Runs `trials` random finitely supported Laurent-valued random variables
 * through the negation identity at the given degree bound and reports
 * any counterexample verbatim (there must be none).
 */
inline TheoremTrialReport run_theorem_trials(const std::vector<std::string>& vars,
                                             int trials, int degree_bound,
                                             std::uint64_t seed) {
    TheoremTrialReport report;
    report.trials = trials;
    RandomGen gen(seed);
    for (int t = 0; t < trials; ++t) {
        auto x = gen.random_variable(vars);
        auto check = theorem_negation_check(x, degree_bound);
        if (!check.ok) {
            ++report.counterexamples;
            if (report.first_failure.empty()) {
                std::string rv;
                for (const auto& o : x.outcomes) {
                    if (!rv.empty()) rv += ", ";
                    rv += "(" + to_string(o.prob) + ", " + o.value.str() + ")";
                }
                report.first_failure =
                    "trial " + std::to_string(t) + ": X = {" + rv + "}, first difference at m_" +
                    (check.first_diff ? check.first_diff->str() : "?") + ": " +
                    check.lhs.str() + " vs " + check.rhs.str();
            }
        }
    }
    return report;
}

} // namespace lsym
