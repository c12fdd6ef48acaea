#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nodaltorus/linear_form.hpp"

using nodaltorus::InvalidInputError;
using nodaltorus::LinearForm;
using nodaltorus::ParamTuple;
using nodaltorus::Rational;

TEST_CASE("canonical strings") {
    CHECK(LinearForm().str() == "0");
    CHECK(LinearForm(Rational(4, 3), Rational(25, 3), Rational(1, 3), Rational(0)).str() ==
          "4/3*a + 25/3*b + 1/3*c");
    CHECK(LinearForm(Rational(0), Rational(1, 3), Rational(4, 3), Rational(25, 3)).str() ==
          "1/3*b + 4/3*c + 25/3*d");
    CHECK(LinearForm(Rational(-1, 2), Rational(0), Rational(0), Rational(2)).str() ==
          "-1/2*a + 2*d");
    CHECK(LinearForm(Rational(1), Rational(-1), Rational(0), Rational(0)).str() ==
          "1*a - 1*b");
}

TEST_CASE("parse inverts print") {
    CHECK(LinearForm::parse("0") == LinearForm());
    CHECK(LinearForm::parse("4/3*a + 25/3*b + 1/3*c") ==
          LinearForm(Rational(4, 3), Rational(25, 3), Rational(1, 3), Rational(0)));
    CHECK(LinearForm::parse("-1/2*a + 2*d") ==
          LinearForm(Rational(-1, 2), Rational(0), Rational(0), Rational(2)));
    // order-insensitive, duplicate-rejecting
    CHECK(LinearForm::parse("2*d + 1*a") ==
          LinearForm(Rational(1), Rational(0), Rational(0), Rational(2)));
    CHECK_THROWS_AS(LinearForm::parse("1*a + 2*a"), InvalidInputError);
    CHECK_THROWS_AS(LinearForm::parse("1*e"), InvalidInputError);
    CHECK_THROWS_AS(LinearForm::parse("1*a +"), InvalidInputError);
    CHECK_THROWS_AS(LinearForm::parse(""), InvalidInputError);

    std::mt19937_64 rng(20260816);
    std::uniform_int_distribution<std::int64_t> num(-50, 50);
    std::uniform_int_distribution<std::int64_t> den(1, 12);
    for (int i = 0; i < 2000; ++i) {
        const LinearForm f(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                           Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        CHECK(LinearForm::parse(f.str()) == f);
    }
}

TEST_CASE("module arithmetic") {
    const LinearForm f(Rational(1), Rational(2), Rational(0), Rational(-1));
    const LinearForm g(Rational(0), Rational(1, 2), Rational(3), Rational(1));
    CHECK((f + g) == LinearForm(Rational(1), Rational(5, 2), Rational(3), Rational(0)));
    CHECK((f - g) == LinearForm(Rational(1), Rational(3, 2), Rational(-3), Rational(-2)));
    CHECK((f * Rational(2)) == LinearForm(Rational(2), Rational(4), Rational(0), Rational(-2)));
    CHECK((Rational(0) * f).is_zero());
    CHECK((-f) == LinearForm(Rational(-1), Rational(-2), Rational(0), Rational(1)));
    CHECK((f - f).is_zero());
}

TEST_CASE("total order is lexicographic in (a, b, c, d) coefficients") {
    const LinearForm ea(Rational(1), Rational(0), Rational(0), Rational(0));
    const LinearForm eb(Rational(0), Rational(1), Rational(0), Rational(0));
    CHECK(ea > eb);
    CHECK(eb < ea);
    CHECK(ea == ea);
    const LinearForm f(Rational(1), Rational(5), Rational(0), Rational(0));
    CHECK(f > ea);
    // antisymmetry + transitivity smoke check on a sorted triple
    CHECK((eb < f && f < LinearForm(Rational(2), Rational(0), Rational(0), Rational(0))));
}

TEST_CASE("evaluation") {
    const LinearForm f(Rational(0), Rational(1, 3), Rational(4, 3), Rational(25, 3));
    const ParamTuple p(Rational(1), Rational(2), Rational(3), Rational(4));
    CHECK(f.eval(p) == Rational(38));
    CHECK(LinearForm().eval(p) == Rational(0));
    CHECK(f.coeff_sum() == Rational(10));
}

TEST_CASE("content and primitive part") {
    const LinearForm f(Rational(4, 3), Rational(25, 3), Rational(1, 3), Rational(0));
    CHECK(f.content() == Rational(1, 3));
    const auto prim = f.primitive();
    CHECK(prim[0] == Rational(4));
    CHECK(prim[1] == Rational(25));
    CHECK(prim[2] == Rational(1));
    CHECK(prim[3] == Rational(0));
    CHECK(LinearForm().content() == Rational(0));
    const LinearForm g(Rational(6), Rational(9), Rational(0), Rational(0));
    CHECK(g.content() == Rational(3));
}
