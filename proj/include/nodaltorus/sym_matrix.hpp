#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "linear_form.hpp"
#include "matrix.hpp"
#include "param_tuple.hpp"

namespace nodaltorus {

// Symmetric matrix whose entries are linear forms in the family parameters.
// This is the symbolic Gram matrix: evaluating it at a parameter tuple gives
// the rational Gram matrix of one concrete torus, while quad_form() keeps the
// parameters symbolic and yields the eigenvalue as a LinearForm.
class SymbolicMatrix {
public:
    explicit SymbolicMatrix(std::size_t n) : n_(n), a_(n * n) {
        if (n == 0)
            throw InvalidInputError("SymbolicMatrix: dimension must be positive");
    }

    std::size_t dim() const { return n_; }

    const LinearForm& at(std::size_t i, std::size_t j) const { return a_.at(i * n_ + j); }

    // Writes both (i, j) and (j, i); the matrix cannot become asymmetric.
    void set(std::size_t i, std::size_t j, LinearForm f) {
        a_.at(i * n_ + j) = f;
        a_.at(j * n_ + i) = std::move(f);
    }

    bool operator==(const SymbolicMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

    RationalMatrix eval(const ParamTuple& p) const {
        RationalMatrix m(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                m.at(i, j) = at(i, j).eval(p);
        return m;
    }

    // q^T S q with the parameters left symbolic.
    LinearForm quad_form(const std::vector<std::int64_t>& q) const {
        if (q.size() != n_)
            throw DimensionMismatchError("SymbolicMatrix: quad_form dimension mismatch");
        LinearForm acc;
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

    // U^T S U, entries expanded exactly. Symmetry is preserved by construction.
    SymbolicMatrix congruence(const RationalMatrix& u) const {
        if (u.dim() != n_)
            throw DimensionMismatchError("SymbolicMatrix: congruence dimension mismatch");
        SymbolicMatrix out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j) {
                LinearForm acc;
                for (std::size_t k = 0; k < n_; ++k) {
                    if (u.at(k, i).is_zero())
                        continue;
                    for (std::size_t l = 0; l < n_; ++l) {
                        if (u.at(l, j).is_zero())
                            continue;
                        acc += at(k, l) * (u.at(k, i) * u.at(l, j));
                    }
                }
                out.set(i, j, std::move(acc));
            }
        return out;
    }

private:
    std::size_t n_;
    std::vector<LinearForm> a_;
};

} // namespace nodaltorus
