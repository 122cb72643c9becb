#include <catch2/catch_amalgamated.hpp>

#include "lsym/random_gen.hpp"

using namespace lsym;

TEST_CASE("random variable validation") {
    RandomVariable<Rational> x{{{Rational(1, 2), Rational(1)},
                                {Rational(1, 2), Rational(3)}}};
    CHECK_NOTHROW(x.validate());
    CHECK(expectation(x) == 2);
    RandomVariable<Rational> bad{{{Rational(1, 2), Rational(1)}}};
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    RandomVariable<Rational> neg{{{Rational(-1), Rational(1)},
                                  {Rational(2), Rational(1)}}};
    CHECK_THROWS_AS(neg.validate(), std::domain_error);
}

TEST_CASE("mgf of the constant variable 1") {
    // every moment E[h_tau o 1] = prod h_{tau_i}(1) = 1
    auto x = RandomVariable<Rational>::deterministic(Rational(1));
    auto f = sigma_mgf(x, 5);
    for (const auto& tau : partitions_up_to(5))
        CHECK(m_coefficient(f, tau) == 1);
    // and e_k o 1 = 0 for k >= 2: only all-ones partitions survive negation
    auto g = neg_sigma_mgf_direct(x, 5);
    for (const auto& tau : partitions_up_to(5)) {
        bool all_ones = tau.length() == tau.weight();
        CHECK(m_coefficient(g, tau) ==
              (all_ones ? Rational(tau.weight() % 2 ? -1 : 1) : Rational(0)));
    }
}

TEST_CASE("moments of a symmetric two-point variable") {
    // X = x or x^-1 with probability 1/2 each
    auto xv = LaurentScalar::variable("x");
    auto xi = LaurentScalar::variable("x", -1);
    RandomVariable<LaurentScalar> X{{{Rational(1, 2), xv}, {Rational(1, 2), xi}}};
    auto half = LaurentScalar(Rational(1, 2));

    // E[h_2 o X] = E[X^2] = (x^2 + x^-2)/2   (h_2 o v = psi^2(v) half... no:
    // h_2 = (p_1^2 + p_2)/2 so h_2 o v = (v^2 + psi^2 v)/2 = v^2 for monomials)
    CHECK(plethysm_moment(X, Basis::h, Partition{2}) ==
          half * (xv * xv + xi * xi));
    // e_2 o v = (v^2 - psi^2 v)/2 = 0 on monomial values
    CHECK(plethysm_moment(X, Basis::e, Partition{2}) == LaurentScalar(0));
    // E[h_1 o X] = (x + x^-1)/2
    auto f = sigma_mgf(X, 4);
    CHECK(m_coefficient(f, Partition{1}) == half * (xv + xi));
    CHECK(f.constant_term() == LaurentScalar(1));
}

TEST_CASE("direct and pairing moment routes agree") {
    RandomGen gen(13);
    for (int t = 0; t < 10; ++t) {
        auto x = gen.random_variable({"x", "y"});
        for (Basis b : {Basis::e, Basis::h, Basis::s})
            for (const auto& tau : partitions_up_to(4)) {
                auto pair = lambda_moment(x, tau, b);
                CHECK(pair.consistent());
            }
    }
    CHECK_THROWS_AS(lambda_moment(RandomVariable<Rational>::deterministic(Rational(1)),
                                  Partition{2}, Basis::m),
                    std::invalid_argument);
}

TEST_CASE("negation identity on random variables") {
    RandomGen gen(17);
    for (int t = 0; t < 15; ++t) {
        auto x = gen.random_variable({"x", "y"});
        auto r = theorem_negation_check(x, 6);
        CHECK(r.ok);
        CHECK_FALSE(r.first_diff.has_value());
    }
    auto report = run_theorem_trials({"x", "y", "z"}, 10, 5, 99);
    CHECK(report.trials == 10);
    CHECK(report.counterexamples == 0);
    CHECK(report.first_failure.empty());
}

TEST_CASE("negation identity over the rational ring") {
    RandomGen gen(19);
    for (int t = 0; t < 10; ++t) {
        RandomVariable<Rational> x{{{Rational(1, 2), gen.small_rational()},
                                    {Rational(1, 2), gen.small_rational()}}};
        CHECK(theorem_negation_check(x, 6).ok);
    }
}
