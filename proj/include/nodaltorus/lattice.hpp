#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace nodaltorus {

// Lattice vectors are plain integer tuples. Entries in every reachable
// computation are tiny (enumeration boxes are bounded and checked), so a
// fixed-width integer with overflow-checked bounds is the honest type; all
// arithmetic on top of them is promoted to arbitrary precision anyway.
using LatticeVector = std::vector<std::int64_t>;

inline std::int64_t one_norm(const LatticeVector& q) {
    std::int64_t s = 0;
    for (const auto x : q)
        s += x < 0 ? -x : x;
    return s;
}

inline bool is_zero(const LatticeVector& q) {
    for (const auto x : q)
        if (x != 0)
            return false;
    return true;
}

// True for the lexicographically positive member of each {q, -q} pair,
// i.e. the first nonzero entry is positive. Zero is not canonical.
inline bool is_canonical_rep(const LatticeVector& q) {
    for (const auto x : q) {
        if (x > 0)
            return true;
        if (x < 0)
            return false;
    }
    return false;
}

// All q in Z^dim with sum |q_i| = m, in ascending lexicographic order.
inline std::vector<LatticeVector> enumerate_v_m(std::size_t dim, std::int64_t m) {
    if (dim == 0)
        throw InvalidInputError("enumerate_v_m: dimension must be positive");
    if (m < 0)
        throw InvalidInputError("enumerate_v_m: m must be non-negative");
    std::vector<LatticeVector> out;
    LatticeVector q(dim, 0);
    auto rec = [&](auto&& self, std::size_t k, std::int64_t rem) -> void {
        if (k + 1 == dim) {
            if (rem == 0) {
                q[k] = 0;
                out.push_back(q);
            } else {
                q[k] = -rem;
                out.push_back(q);
                q[k] = rem;
                out.push_back(q);
            }
            return;
        }
        for (std::int64_t v = -rem; v <= rem; ++v) {
            q[k] = v;
            self(self, k + 1, rem - (v < 0 ? -v : v));
        }
    };
    rec(rec, 0, m);
    return out;
}

// All nonzero q in Z^dim with q^T Q q <= cutoff, ascending lexicographic.
//
// Box bound: for positive definite Q, q^T Q q <= L forces
// q_i^2 <= L * (Q^{-1})_ii, so a finite axis-aligned box contains the ball;
// every candidate inside the box is then filtered exactly. The inner loop
// runs on a denominator-cleared integer copy of Q so no rational arithmetic
// happens per candidate.
inline std::vector<LatticeVector> enumerate_ball(const RationalMatrix& qmat,
                                                 const Rational& cutoff) {
    const std::size_t n = qmat.dim();
    if (!qmat.is_symmetric())
        throw InvalidInputError("enumerate_ball: matrix must be symmetric");
    if (!qmat.is_positive_definite())
        throw NotPositiveDefiniteError("enumerate_ball: matrix must be positive definite");
    if (cutoff.sign() <= 0)
        return {};

    const RationalMatrix gamma = qmat.inverse();
    std::vector<std::int64_t> bound(n);
    double box_cells = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const BigInt b = isqrt_ceil(cutoff * gamma.at(i, i));
        if (b > 1'000'000)
            throw InvalidInputError("enumerate_ball: cutoff too large, enumeration box exceeds limits");
        bound[i] = static_cast<std::int64_t>(b);
        box_cells *= static_cast<double>(2 * bound[i] + 1);
        if (box_cells > 1e8)
            throw InvalidInputError("enumerate_ball: cutoff too large, enumeration box exceeds limits");
    }

    auto [den, m] = qmat.cleared();
    auto mat = [&](std::size_t i, std::size_t j) -> const BigInt& { return m[i * n + j]; };
    // q^T Q q <= cutoff  <=>  q^T M q * cutoff.den <= cutoff.num * den
    const BigInt lhs_scale = cutoff.den();
    const BigInt rhs = cutoff.num() * den;

    std::vector<LatticeVector> out;
    LatticeVector q(n, 0);
    // w = q^T M q over the fixed prefix; cross = sum_{i<k} q_i M_ik.
    auto rec = [&](auto&& self, std::size_t k, const BigInt& w) -> void {
        if (k == n) {
            if (!is_zero(q) && w * lhs_scale <= rhs)
                out.push_back(q);
            return;
        }
        BigInt cross = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (q[i] != 0)
                cross += q[i] * mat(i, k);
        for (std::int64_t v = -bound[k]; v <= bound[k]; ++v) {
            q[k] = v;
            self(self, k + 1, w + v * (2 * cross + v * mat(k, k)));
        }
        q[k] = 0;
    };
    rec(rec, 0, BigInt(0));
    return out;
}

} // namespace nodaltorus
