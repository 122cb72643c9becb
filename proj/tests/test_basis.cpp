#include <catch2/catch_amalgamated.hpp>

#include "lsym/basis.hpp"
#include "lsym/random_gen.hpp"

using namespace lsym;

using QS = SymSeries<Rational>;

TEST_CASE("basis codes") {
    CHECK(parse_basis("m") == Basis::m);
    CHECK(parse_basis("s") == Basis::s);
    CHECK(basis_char(Basis::h) == 'h');
    CHECK_THROWS(parse_basis("q"));
}

TEST_CASE("closed-form p-expansions of h_n and e_n") {
    // h_2 = (p_1^2 + p_2)/2, e_2 = (p_1^2 - p_2)/2
    auto h2 = basis_to_p(Basis::h, Partition{2});
    CHECK(h2.at(Partition{1, 1}) == Rational(1, 2));
    CHECK(h2.at(Partition{2}) == Rational(1, 2));
    auto e2 = basis_to_p(Basis::e, Partition{2});
    CHECK(e2.at(Partition{1, 1}) == Rational(1, 2));
    CHECK(e2.at(Partition{2}) == Rational(-1, 2));
    // h_3 = p_1^3/6 + p_2 p_1 / 2 + p_3/3
    auto h3 = basis_to_p(Basis::h, Partition{3});
    CHECK(h3.at(Partition{1, 1, 1}) == Rational(1, 6));
    CHECK(h3.at(Partition{2, 1}) == Rational(1, 2));
    CHECK(h3.at(Partition{3}) == Rational(1, 3));
    // generally h_n = sum_{lam |- n} p_lam / z_lam
    for (int n = 1; n <= 8; ++n)
        for (const auto& [lam, c] : basis_to_p(Basis::h, Partition{n}))
            CHECK(c == Rational(1, lam.z_factor()));
}

TEST_CASE("monomial expansions of small elements") {
    int d = 4;
    // p_2 = m_2; e_2 = m_11; h_2 = m_2 + m_11
    auto p2 = QS::power_sum(Partition{2}, d);
    CHECK(m_coefficient(p2, Partition{2}) == 1);
    CHECK(m_coefficient(p2, Partition{1, 1}) == 0);
    auto e2 = unit_basis_q(Basis::e, Partition{2}, d);
    CHECK(m_coefficient(e2, Partition{1, 1}) == 1);
    CHECK(m_coefficient(e2, Partition{2}) == 0);
    auto h2 = unit_basis_q(Basis::h, Partition{2}, d);
    CHECK(m_coefficient(h2, Partition{2}) == 1);
    CHECK(m_coefficient(h2, Partition{1, 1}) == 1);
}

TEST_CASE("schur functions") {
    // s_[1,1] = e_2, s_[2] = h_2, s_[2,1] = p_1^3/3 - p_3/3
    CHECK(basis_to_p(Basis::s, Partition{1, 1}) == basis_to_p(Basis::e, Partition{2}));
    CHECK(basis_to_p(Basis::s, Partition{2}) == basis_to_p(Basis::h, Partition{2}));
    auto s21 = basis_to_p(Basis::s, Partition{2, 1});
    CHECK(s21.at(Partition{1, 1, 1}) == Rational(1, 3));
    CHECK(s21.at(Partition{3}) == Rational(-1, 3));
    CHECK(s21.count(Partition{2, 1}) == 0);

    // orthonormality under the Hall pairing
    int d = 5;
    for (const auto& lam : partitions_up_to(d))
        for (const auto& mu : partitions_up_to(d)) {
            auto ip = hall_inner(unit_basis_q(Basis::s, lam, d),
                                 unit_basis_q(Basis::s, mu, d));
            CHECK(ip == (lam == mu ? 1 : 0));
        }

    // omega(s_lam) = s_{lam'}
    for (const auto& lam : partitions_up_to(6))
        CHECK(omega(unit_basis_q(Basis::s, lam, 6)) ==
              unit_basis_q(Basis::s, lam.conjugate(), 6));
}

TEST_CASE("dual pairings between m and h") {
    int d = 5;
    for (const auto& lam : partitions_up_to(d))
        for (const auto& mu : partitions_up_to(d)) {
            auto ip = hall_inner(unit_basis_q(Basis::m, lam, d),
                                 unit_basis_q(Basis::h, mu, d));
            CHECK(ip == (lam == mu ? 1 : 0));
        }
}

TEST_CASE("round trips through every basis") {
    RandomGen gen(5);
    for (int t = 0; t < 10; ++t) {
        auto f = gen.laurent_series({"x", "y"}, 6);
        for (Basis b : {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s})
            CHECK(from_basis(b, to_basis(f, b), 6) == f);
    }
}

TEST_CASE("expand in a finite variable alphabet") {
    // h_2(t1, t2) = t1^2 + t1 t2 + t2^2; e_2(t1, t2) = t1 t2
    auto h2 = unit_basis_q(Basis::h, Partition{2}, 4);
    auto t1 = LaurentScalar::variable("t1");
    auto t2 = LaurentScalar::variable("t2");
    CHECK(expand_in_variables(h2, 2) == t1 * t1 + t1 * t2 + t2 * t2);
    auto e2 = unit_basis_q(Basis::e, Partition{2}, 4);
    CHECK(expand_in_variables(e2, 2) == t1 * t2);
    // e_3 vanishes in two variables
    auto e3 = unit_basis_q(Basis::e, Partition{3}, 4);
    CHECK(expand_in_variables(e3, 2).is_zero());
}

TEST_CASE("filtration statistics and membership") {
    Partition tau{3, 2, 2, 1};
    CHECK(filtration_statistic(FiltrationKind::degree, tau) == 8);
    CHECK(filtration_statistic(FiltrationKind::mult_length, tau) == 4);
    CHECK(filtration_statistic(FiltrationKind::mult_distinct, tau) == 3);
    CHECK(parse_filtration("degree") == FiltrationKind::degree);
    CHECK(parse_filtration("mult-length") == FiltrationKind::mult_length);
    CHECK(parse_filtration("mult-distinct") == FiltrationKind::mult_distinct);

    // a series supported in m_[2,2] lies in the length filtration > 1
    QS f(4);
    f = from_basis(Basis::m,
                   std::map<Partition, Rational>{{Partition{2, 2}, Rational(1)}}, 4);
    CHECK(filtration_check(f, FiltrationKind::mult_length, 1));
    CHECK(filtration_check(f, FiltrationKind::mult_distinct, 0));
    CHECK_FALSE(filtration_check(f, FiltrationKind::mult_distinct, 1));
    auto viol = filtration_violation(f, FiltrationKind::mult_distinct, 1);
    REQUIRE(viol.has_value());
    CHECK(*viol == Partition{2, 2});
}
