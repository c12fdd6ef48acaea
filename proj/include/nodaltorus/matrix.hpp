#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace nodaltorus {

// Dense square matrix over the rationals. Everything here is exact: the
// determinant uses fraction-free (Bareiss) elimination on a denominator-
// cleared integer copy, and the inverse is adjugate over determinant.
class RationalMatrix {
public:
    explicit RationalMatrix(std::size_t n) : n_(n), a_(n * n) {
        if (n == 0)
            throw InvalidInputError("RationalMatrix: dimension must be positive");
    }

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = Rational(1);
        return m;
    }

    std::size_t dim() const { return n_; }

    Rational& at(std::size_t i, std::size_t j) { return a_.at(i * n_ + j); }
    const Rational& at(std::size_t i, std::size_t j) const { return a_.at(i * n_ + j); }

    bool operator==(const RationalMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (at(i, j) != at(j, i))
                    return false;
        return true;
    }

    RationalMatrix transpose() const {
        RationalMatrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

    RationalMatrix operator*(const RationalMatrix& o) const {
        if (n_ != o.n_)
            throw DimensionMismatchError("RationalMatrix: product dimension mismatch");
        RationalMatrix r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const Rational& aik = at(i, k);
                if (aik.is_zero())
                    continue;
                for (std::size_t j = 0; j < n_; ++j)
                    r.at(i, j) += aik * o.at(k, j);
            }
        return r;
    }

    RationalMatrix operator*(const Rational& s) const {
        RationalMatrix r(n_);
        for (std::size_t i = 0; i < n_ * n_; ++i)
            r.a_[i] = a_[i] * s;
        return r;
    }

    std::vector<Rational> matvec(const std::vector<Rational>& v) const {
        if (v.size() != n_)
            throw DimensionMismatchError("RationalMatrix: matvec dimension mismatch");
        std::vector<Rational> out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                out[i] += at(i, j) * v[j];
        return out;
    }

    // q^T M q for an integer vector, the workhorse of spectrum enumeration.
    Rational quad_form(const std::vector<std::int64_t>& q) const {
        if (q.size() != n_)
            throw DimensionMismatchError("RationalMatrix: quad_form dimension mismatch");
        Rational acc;
        for (std::size_t i = 0; i < n_; ++i) {
            if (q[i] == 0)
                continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (q[j] == 0)
                    continue;
                acc += at(i, j) * Rational(BigInt(q[i]) * BigInt(q[j]));
            }
        }
        return acc;
    }

    // Least common positive D with D * (*this) integral, plus that integer matrix.
    std::pair<BigInt, std::vector<BigInt>> cleared() const {
        BigInt d = 1;
        for (const auto& x : a_)
            d = boost::multiprecision::lcm(d, x.den());
        std::vector<BigInt> m(n_ * n_);
        for (std::size_t i = 0; i < n_ * n_; ++i)
            m[i] = a_[i].num() * (d / a_[i].den());
        return {d, std::move(m)};
    }

    Rational det() const {
        auto [d, m] = cleared();
        const BigInt idet = bareiss_det(m, n_);
        // det(M/d) = det(M) / d^n
        BigInt dn = 1;
        for (std::size_t i = 0; i < n_; ++i)
            dn *= d;
        return Rational(idet, dn);
    }

    // Determinant of the top-left k x k block, k = 1..n.
    Rational leading_minor(std::size_t k) const {
        if (k == 0 || k > n_)
            throw InvalidInputError("RationalMatrix: minor index out of range");
        RationalMatrix sub(k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                sub.at(i, j) = at(i, j);
        return sub.det();
    }

    // Sylvester criterion; requires symmetry first.
    bool is_positive_definite() const {
        if (!is_symmetric())
            return false;
        for (std::size_t k = 1; k <= n_; ++k)
            if (leading_minor(k).sign() <= 0)
                return false;
        return true;
    }

    RationalMatrix inverse() const {
        const Rational d = det();
        if (d.is_zero())
            throw SingularMatrixError("RationalMatrix: singular matrix has no inverse");
        RationalMatrix inv(n_);
        const Rational dinv = d.reciprocal();
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                // adj(A)_ij = (-1)^{i+j} * minor with row j, column i deleted
                const Rational cof = deleted_minor(j, i);
                inv.at(i, j) = (((i + j) % 2 == 0) ? cof : -cof) * dinv;
            }
        return inv;
    }

private:
    Rational deleted_minor(std::size_t row, std::size_t col) const {
        RationalMatrix sub(n_ - 1);
        std::size_t si = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == row)
                continue;
            std::size_t sj = 0;
            for (std::size_t j = 0; j < n_; ++j) {
                if (j == col)
                    continue;
                sub.at(si, sj) = at(i, j);
                ++sj;
            }
            ++si;
        }
        return sub.det();
    }

    // Fraction-free elimination: all intermediate divisions are exact over
    // the integers, so nothing is ever rounded.
    static BigInt bareiss_det(std::vector<BigInt> m, std::size_t n) {
        if (n == 1)
            return m[0];
        auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * n + j]; };
        BigInt prev = 1;
        int sign = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (at(k, k) == 0) {
                std::size_t pivot = k + 1;
                while (pivot < n && at(pivot, k) == 0)
                    ++pivot;
                if (pivot == n)
                    return BigInt(0);
                for (std::size_t j = 0; j < n; ++j)
                    std::swap(at(k, j), at(pivot, j));
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            prev = at(k, k);
        }
        return sign > 0 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
    }

    std::size_t n_;
    std::vector<Rational> a_;
};

} // namespace nodaltorus
