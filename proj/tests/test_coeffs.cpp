#include <catch2/catch_amalgamated.hpp>

#include "lsym/random_gen.hpp"
#include "lsym/ring.hpp"

using namespace lsym;

TEST_CASE("rational serialization") {
    CHECK(to_string(Rational(3, 2)) == "3/2");
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("pow_rational") {
    CHECK(pow_rational(Rational(1, 2), 0) == 1);
    CHECK(pow_rational(Rational(1, 2), 3) == Rational(1, 8));
    CHECK(pow_rational(Rational(-3), 2) == 9);
}

TEST_CASE("laurent arithmetic") {
    auto x = LaurentScalar::variable("x");
    auto y = LaurentScalar::variable("y");
    auto xinv = LaurentScalar::variable("x", -1);
    CHECK(x * xinv == LaurentScalar(1));
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x - x).is_zero());
    CHECK(LaurentScalar(Rational(3, 2)).is_constant());
    CHECK((x + LaurentScalar(2)).constant_coefficient() == 2);
    CHECK((x * x * y).coefficient({{"x", 2}, {"y", 1}}) == 1);
}

TEST_CASE("laurent serialization") {
    auto x = LaurentScalar::variable("x");
    auto y = LaurentScalar::variable("y");
    CHECK((LaurentScalar(Rational(3, 2)) * x * x *
           LaurentScalar::variable("y", -1))
              .str() == "3/2·x^2·y^-1");
    CHECK(LaurentScalar(0).str() == "0");
    CHECK((x - y).str() == "x - y");
    CHECK(parse_laurent("3/2·x^2·y^-1 + 4 - x") ==
          LaurentScalar(Rational(3, 2)) * x * x * LaurentScalar::variable("y", -1) +
              LaurentScalar(4) - x);
    CHECK(parse_laurent("2*x") == LaurentScalar(2) * x);
    CHECK_THROWS_AS(parse_laurent(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_laurent("x^"), std::invalid_argument);
}

TEST_CASE("laurent serialization round trip on random values") {
    RandomGen gen(42);
    for (int t = 0; t < 50; ++t) {
        auto v = gen.laurent({"x", "y", "z"}, 4, 3);
        CHECK(parse_laurent(v.str()) == v);
    }
}

TEST_CASE("adams operations are ring maps") {
    CHECK(adams(3, Rational(5, 7)) == Rational(5, 7));
    RandomGen gen(7);
    for (int t = 0; t < 25; ++t) {
        auto a = gen.laurent({"x", "y"});
        auto b = gen.laurent({"x", "y"});
        for (int i = 1; i <= 4; ++i) {
            CHECK(adams(i, a * b) == adams(i, a) * adams(i, b));
            CHECK(adams(i, a + b) == adams(i, a) + adams(i, b));
            for (int j = 1; j <= 3; ++j)
                CHECK(adams(i, adams(j, a)) == adams(i * j, a));
        }
        CHECK(adams(1, a) == a);
    }
    CHECK(adams(2, LaurentScalar::variable("x")) ==
          LaurentScalar::variable("x", 2));
    CHECK_THROWS_AS(adams(0, Rational(1)), std::invalid_argument);
}

TEST_CASE("ring traits") {
    CHECK(ring_traits<Rational>::parse("5/3") == Rational(5, 3));
    CHECK(ring_traits<LaurentScalar>::from_rational(Rational(2)) ==
          LaurentScalar(2));
    CHECK(std::string(ring_traits<Rational>::name()) == "Q");
    CHECK(std::string(ring_traits<LaurentScalar>::name()) == "laurent");
}
