#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nodaltorus/conway_sloane.hpp"

namespace cs = nodaltorus::conway_sloane;
using nodaltorus::LinearForm;
using nodaltorus::ParamTuple;
using nodaltorus::Rational;
using nodaltorus::RationalMatrix;
using nodaltorus::Sign;
using nodaltorus::SymbolicMatrix;

namespace {
const ParamTuple kOnes(Rational(1), Rational(1), Rational(1), Rational(1));
const ParamTuple kSample(Rational(1), Rational(2), Rational(3), Rational(4));
} // namespace

TEST_CASE("U is orthogonal") {
    const RationalMatrix& u = cs::transform_u();
    CHECK((u.transpose() * u) == RationalMatrix::identity(4));
    CHECK((u * u.transpose()) == RationalMatrix::identity(4));
    CHECK(u.det().abs() == Rational(1));
}

TEST_CASE("both matrices reduce to the identity at equal parameters") {
    CHECK(cs::q_plus().eval(kOnes) == RationalMatrix::identity(4));
    CHECK(cs::q_minus().eval(kOnes) == RationalMatrix::identity(4));
}

TEST_CASE("entries of the plus matrix") {
    const SymbolicMatrix& qp = cs::q_plus();
    CHECK(qp.at(0, 0) ==
          LinearForm(Rational(9, 12), Rational(1, 12), Rational(1, 12), Rational(1, 12)));
    CHECK(qp.at(0, 1) ==
          LinearForm(Rational(3, 12), Rational(-3, 12), Rational(-1, 12), Rational(1, 12)));
    CHECK(qp.at(3, 3) ==
          LinearForm(Rational(1, 12), Rational(1, 12), Rational(1, 12), Rational(9, 12)));
    // symmetry of the symbolic matrix
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(qp.at(i, j) == qp.at(j, i));
}

TEST_CASE("minus matrix is the exact congruence transform") {
    const SymbolicMatrix& qm = cs::q_minus();
    // first diagonal entry works out to (9a + b + c + d) / 12 again
    CHECK(qm.at(0, 0) ==
          LinearForm(Rational(9, 12), Rational(1, 12), Rational(1, 12), Rational(1, 12)));
    // but the matrices differ symbolically somewhere
    bool differs = false;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (qm.at(i, j) != cs::q_plus().at(i, j))
                differs = true;
    CHECK(differs);
    // and the numeric matrices satisfy Q- = U^T Q+ U at sample parameters
    const RationalMatrix& u = cs::transform_u();
    CHECK(qm.eval(kSample) == (u.transpose() * cs::q_plus().eval(kSample) * u));
}

TEST_CASE("positive definite at positive parameters") {
    const ParamTuple tuples[] = {
        kSample,
        ParamTuple(Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)),
        ParamTuple(Rational(2), Rational(3), Rational(5), Rational(7)),
        ParamTuple(Rational(7), Rational(1, 3), Rational(11, 2), Rational(4)),
    };
    for (const auto& p : tuples) {
        CHECK(cs::q_plus().eval(p).is_positive_definite());
        CHECK(cs::q_minus().eval(p).is_positive_definite());
    }
}

TEST_CASE("symbolic quadratic form of the all-ones vector") {
    // sum of all sixteen entries of Q+ works out to (1/3)(9a + b + c + d)
    const LinearForm f = cs::q_plus().quad_form({1, 1, 1, 1});
    CHECK(f == LinearForm(Rational(3), Rational(1, 3), Rational(1, 3), Rational(1, 3)));
    // cross-check symbolic vs numeric evaluation
    CHECK(f.eval(kSample) == cs::q_plus().eval(kSample).quad_form({1, 1, 1, 1}));
}

TEST_CASE("evenness: quad_form(q) == quad_form(-q)") {
    std::mt19937_64 rng(20260816);
    std::uniform_int_distribution<std::int64_t> entry(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::int64_t> q(4), neg(4);
        for (std::size_t i = 0; i < 4; ++i) {
            q[i] = entry(rng);
            neg[i] = -q[i];
        }
        for (const Sign s : {Sign::plus, Sign::minus})
            CHECK(cs::q(s).quad_form(q) == cs::q(s).quad_form(neg));
    }
}

TEST_CASE("congruence property on the even sublattice") {
    // Q-(q) = Q+(U q) whenever U q is integral, e.g. for q in 2 Z^4.
    const RationalMatrix& u = cs::transform_u();
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> entry(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::int64_t> q(4);
        std::vector<Rational> qr(4);
        for (std::size_t i = 0; i < 4; ++i) {
            q[i] = 2 * entry(rng);
            qr[i] = Rational(q[i]);
        }
        const auto uq = u.matvec(qr);
        std::vector<std::int64_t> uqi(4);
        for (std::size_t i = 0; i < 4; ++i) {
            REQUIRE(uq[i].is_integer());
            uqi[i] = static_cast<std::int64_t>(uq[i].num());
        }
        CHECK(cs::q_minus().quad_form(q) == cs::q_plus().quad_form(uqi));
    }
}

TEST_CASE("sign parsing") {
    CHECK(cs::parse_sign('+') == Sign::plus);
    CHECK(cs::parse_sign('-') == Sign::minus);
    CHECK(cs::sign_char(Sign::minus) == '-');
    CHECK_THROWS_AS(cs::parse_sign('x'), nodaltorus::InvalidInputError);
}
