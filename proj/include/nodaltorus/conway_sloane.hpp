#pragma once

#include <array>
#include <cstdint>

#include "matrix.hpp"
#include "sym_matrix.hpp"

namespace nodaltorus {

// The Conway-Sloane isospectral pair of 4-dimensional flat tori. The family
// is parametrized by positive reals (a, b, c, d); for pairwise distinct
// parameters T+(a,b,c,d) and T-(a,b,c,d) are isospectral but not isometric.
// We work directly with the inverses Q+/Q- of the Gram matrices, since those
// are what the eigenvalues q^T Q q are built from.
namespace conway_sloane {

namespace detail {

// 12 * Q+ as integer coefficients of (a, b, c, d) per entry, row-major.
inline constexpr std::array<std::array<std::array<std::int64_t, 4>, 4>, 4> kQPlusTimes12 = {{
    {{{9, 1, 1, 1}, {3, -3, -1, 1}, {3, 1, -3, -1}, {3, -1, 1, -3}}},
    {{{3, -3, -1, 1}, {1, 9, 1, 1}, {1, -3, 3, -1}, {1, 3, -1, -3}}},
    {{{3, 1, -3, -1}, {1, -3, 3, -1}, {1, 1, 9, 1}, {1, -1, -3, 3}}},
    {{{3, -1, 1, -3}, {1, 3, -1, -3}, {1, -1, -3, 3}, {1, 1, 1, 9}}},
}};

// 2 * U, an orthogonal change of basis (U^T U = I).
inline constexpr std::array<std::array<std::int64_t, 4>, 4> kUTimes2 = {{
    {{-1, 1, 1, 1}},
    {{-1, -1, -1, 1}},
    {{-1, 1, -1, -1}},
    {{-1, -1, 1, -1}},
}};

inline SymbolicMatrix build_q_plus() {
    SymbolicMatrix m(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j) {
            const auto& e = kQPlusTimes12[i][j];
            m.set(i, j, LinearForm(Rational(e[0], 12), Rational(e[1], 12), Rational(e[2], 12),
                                   Rational(e[3], 12)));
        }
    return m;
}

inline RationalMatrix build_u() {
    RationalMatrix u(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            u.at(i, j) = Rational(kUTimes2[i][j], 2);
    return u;
}

} // namespace detail

// Symbolic inverse Gram matrix of T+.
inline const SymbolicMatrix& q_plus() {
    static const SymbolicMatrix m = detail::build_q_plus();
    return m;
}

// The orthogonal conjugating matrix relating the two tori.
inline const RationalMatrix& transform_u() {
    static const RationalMatrix u = detail::build_u();
    return u;
}

// Symbolic inverse Gram matrix of T-: Q- = U^T Q+ U, expanded exactly once.
inline const SymbolicMatrix& q_minus() {
    static const SymbolicMatrix m = q_plus().congruence(transform_u());
    return m;
}

enum class Sign { plus, minus };

inline const SymbolicMatrix& q(Sign s) { return s == Sign::plus ? q_plus() : q_minus(); }

inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

inline Sign parse_sign(char c) {
    if (c == '+')
        return Sign::plus;
    if (c == '-')
        return Sign::minus;
    throw InvalidInputError(std::string("Sign: expected '+' or '-', got '") + c + "'");
}

} // namespace conway_sloane

using conway_sloane::Sign;

} // namespace nodaltorus
