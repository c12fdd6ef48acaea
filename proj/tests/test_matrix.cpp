#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nodaltorus/matrix.hpp"

using nodaltorus::RationalMatrix;
using nodaltorus::Rational;
using nodaltorus::SingularMatrixError;

namespace {

// Independent determinant oracle: plain Laplace expansion.
Rational laplace_det(const RationalMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 1)
        return m.at(0, 0);
    Rational acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero())
            continue;
        RationalMatrix sub(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t sj = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j)
                    continue;
                sub.at(i - 1, sj++) = m.at(i, k);
            }
        }
        const Rational term = m.at(0, j) * laplace_det(sub);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<std::int64_t> num(-6, 6);
    std::uniform_int_distribution<std::int64_t> den(1, 4);
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = Rational(num(rng), den(rng));
    return m;
}

} // namespace

TEST_CASE("determinant agrees with Laplace expansion") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const RationalMatrix m = random_matrix(rng, n);
        CHECK(m.det() == laplace_det(m));
    }
}

TEST_CASE("determinant handles zero pivots") {
    RationalMatrix m(3);
    // first pivot zero, needs a row swap inside the elimination
    m.at(0, 1) = Rational(2);
    m.at(1, 0) = Rational(1);
    m.at(2, 2) = Rational(5);
    CHECK(m.det() == Rational(-10));
    CHECK(m.det() == laplace_det(m));
}

TEST_CASE("identity, transpose, product") {
    const RationalMatrix id = RationalMatrix::identity(4);
    CHECK(id.det() == Rational(1));
    CHECK(id.is_symmetric());
    CHECK(id.is_positive_definite());

    std::mt19937_64 rng(7);
    const RationalMatrix a = random_matrix(rng, 4);
    CHECK((a * id) == a);
    CHECK((id * a) == a);
    CHECK(a.transpose().transpose() == a);
    // det(A B) = det(A) det(B)
    const RationalMatrix b = random_matrix(rng, 4);
    CHECK((a * b).det() == a.det() * b.det());
}

TEST_CASE("inverse is exact") {
    std::mt19937_64 rng(99);
    const RationalMatrix id = RationalMatrix::identity(4);
    int nonsingular = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const RationalMatrix a = random_matrix(rng, 4);
        if (a.det().is_zero())
            continue;
        ++nonsingular;
        const RationalMatrix inv = a.inverse();
        CHECK((a * inv) == id);
        CHECK((inv * a) == id);
    }
    CHECK(nonsingular > 10);

    RationalMatrix sing(2);
    sing.at(0, 0) = Rational(1);
    sing.at(0, 1) = Rational(2);
    sing.at(1, 0) = Rational(2);
    sing.at(1, 1) = Rational(4);
    CHECK_THROWS_AS(sing.inverse(), SingularMatrixError);
}

TEST_CASE("positive definiteness via leading minors") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const RationalMatrix a = random_matrix(rng, 3);
        if (a.det().is_zero())
            continue;
        // A^T A is positive definite for nonsingular A
        const RationalMatrix g = a.transpose() * a;
        CHECK(g.is_symmetric());
        CHECK(g.is_positive_definite());
    }

    RationalMatrix indef(2); // symmetric but indefinite
    indef.at(0, 1) = Rational(1);
    indef.at(1, 0) = Rational(1);
    CHECK(indef.is_symmetric());
    CHECK_FALSE(indef.is_positive_definite());

    RationalMatrix asym(2);
    asym.at(0, 1) = Rational(1);
    CHECK_FALSE(asym.is_positive_definite());
}

TEST_CASE("quadratic form matches explicit double loop") {
    std::mt19937_64 rng(11);
    const RationalMatrix m = random_matrix(rng, 4);
    const std::vector<std::int64_t> q = {2, -1, 0, 3};
    Rational expect;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            expect += m.at(i, j) * Rational(q[i]) * Rational(q[j]);
    CHECK(m.quad_form(q) == expect);
    CHECK(RationalMatrix::identity(4).quad_form(q) == Rational(14));
}

TEST_CASE("matvec") {
    RationalMatrix m(2);
    m.at(0, 0) = Rational(1, 2);
    m.at(0, 1) = Rational(1);
    m.at(1, 0) = Rational(0);
    m.at(1, 1) = Rational(-2);
    const auto out = m.matvec({Rational(4), Rational(3)});
    REQUIRE(out.size() == 2);
    CHECK(out[0] == Rational(5));
    CHECK(out[1] == Rational(-6));
}

TEST_CASE("denominator clearing") {
    RationalMatrix m(2);
    m.at(0, 0) = Rational(1, 2);
    m.at(0, 1) = Rational(1, 3);
    m.at(1, 0) = Rational(1, 3);
    m.at(1, 1) = Rational(5);
    const auto [den, ints] = m.cleared();
    CHECK(den == 6);
    CHECK(ints[0] == 3);
    CHECK(ints[1] == 2);
    CHECK(ints[2] == 2);
    CHECK(ints[3] == 30);
}
