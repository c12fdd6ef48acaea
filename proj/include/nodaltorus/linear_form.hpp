#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "param_tuple.hpp"
#include "rational.hpp"

namespace nodaltorus {

// Symbolic eigenvalue: a rational linear combination of the family parameters
// a, b, c, d. Spectra are compared as sets of these forms, so equality and
// ordering are exact, independent of any particular parameter values.
class LinearForm {
public:
    static constexpr std::size_t kVars = 4;
    static constexpr std::array<char, kVars> kVarNames = {'a', 'b', 'c', 'd'};

    LinearForm() = default;

    explicit LinearForm(std::array<Rational, kVars> coeffs) : c_(std::move(coeffs)) {}

    LinearForm(Rational ca, Rational cb, Rational cc, Rational cd)
        : c_{std::move(ca), std::move(cb), std::move(cc), std::move(cd)} {}

    const Rational& coeff(std::size_t i) const { return c_.at(i); }
    const std::array<Rational, kVars>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero())
                return false;
        return true;
    }

    LinearForm& operator+=(const LinearForm& o) {
        for (std::size_t i = 0; i < kVars; ++i)
            c_[i] += o.c_[i];
        return *this;
    }

    LinearForm& operator-=(const LinearForm& o) {
        for (std::size_t i = 0; i < kVars; ++i)
            c_[i] -= o.c_[i];
        return *this;
    }

    LinearForm& operator*=(const Rational& s) {
        for (auto& x : c_)
            x *= s;
        return *this;
    }

    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator*(const Rational& s, LinearForm f) { return f *= s; }
    friend LinearForm operator*(LinearForm f, const Rational& s) { return f *= s; }

    LinearForm operator-() const {
        LinearForm r = *this;
        for (auto& x : r.c_)
            x = -x;
        return r;
    }

    bool operator==(const LinearForm& o) const { return c_ == o.c_; }

    // Total order: lexicographic on (c_a, c_b, c_c, c_d). Any total order
    // works for canonical sorting; this one is the simplest to state.
    friend std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b) {
        for (std::size_t i = 0; i < kVars; ++i) {
            const auto cmp = a.c_[i] <=> b.c_[i];
            if (cmp != std::strong_ordering::equal)
                return cmp;
        }
        return std::strong_ordering::equal;
    }

    Rational eval(const ParamTuple& p) const {
        Rational acc;
        for (std::size_t i = 0; i < kVars; ++i)
            acc += c_[i] * p[i];
        return acc;
    }

    Rational coeff_sum() const {
        Rational acc;
        for (const auto& x : c_)
            acc += x;
        return acc;
    }

    // Canonical text form: nonzero terms "c*v" in variable order, joined with
    // " + " (" - " absorbs a negative coefficient); the zero form is "0".
    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < kVars; ++i) {
            if (c_[i].is_zero())
                continue;
            const Rational mag = c_[i].abs();
            if (out.empty())
                out += c_[i].sign() < 0 ? "-" : "";
            else
                out += c_[i].sign() < 0 ? " - " : " + ";
            out += mag.str();
            out += '*';
            out += kVarNames[i];
        }
        return out.empty() ? "0" : out;
    }

    // Inverse of str(). Accepts terms in any order but rejects duplicates,
    // so print-parse is exactly the identity on canonical strings.
    static LinearForm parse(std::string_view text) {
        LinearForm f;
        if (text == "0")
            return f;
        if (text.empty())
            throw InvalidInputError("LinearForm: empty string");
        std::array<bool, kVars> seen{};
        std::size_t pos = 0;
        int sign = 1;
        if (text[0] == '-') {
            sign = -1;
            pos = 1;
        }
        while (pos < text.size()) {
            const auto star = text.find('*', pos);
            if (star == std::string_view::npos || star + 1 >= text.size())
                throw InvalidInputError("LinearForm: cannot parse '" + std::string(text) + "'");
            const Rational mag = Rational::parse(text.substr(pos, star - pos));
            const char var = text[star + 1];
            std::size_t vi = kVars;
            for (std::size_t i = 0; i < kVars; ++i)
                if (kVarNames[i] == var)
                    vi = i;
            if (vi == kVars)
                throw InvalidInputError(std::string("LinearForm: unknown variable '") + var + "'");
            if (seen[vi])
                throw InvalidInputError(std::string("LinearForm: duplicate variable '") + var + "'");
            seen[vi] = true;
            f.c_[vi] = sign < 0 ? -mag : mag;
            pos = star + 2;
            if (pos == text.size())
                break;
            if (text.compare(pos, 3, " + ") == 0)
                sign = 1;
            else if (text.compare(pos, 3, " - ") == 0)
                sign = -1;
            else
                throw InvalidInputError("LinearForm: cannot parse '" + std::string(text) + "'");
            pos += 3;
        }
        return f;
    }

    // Positive rational g with *this == g * primitive(), where primitive()
    // has coprime integer coefficients. Zero form has content 0.
    Rational content() const {
        BigInt num_gcd = 0;
        BigInt den_lcm = 1;
        for (const auto& x : c_) {
            if (x.is_zero())
                continue;
            num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(x.num()));
            den_lcm = boost::multiprecision::lcm(den_lcm, x.den());
        }
        if (num_gcd == 0)
            return Rational(0);
        return Rational(num_gcd, den_lcm);
    }

    // Integer coefficients after dividing out the content; empty if zero form.
    std::array<Rational, kVars> primitive() const {
        const Rational g = content();
        std::array<Rational, kVars> out{};
        if (g.is_zero())
            return out;
        for (std::size_t i = 0; i < kVars; ++i)
            out[i] = c_[i] / g;
        return out;
    }

private:
    std::array<Rational, kVars> c_{};
};

inline std::ostream& operator<<(std::ostream& os, const LinearForm& f) { return os << f.str(); }

} // namespace nodaltorus

template <>
struct std::hash<nodaltorus::LinearForm> {
    std::size_t operator()(const nodaltorus::LinearForm& f) const noexcept {
        return std::hash<std::string>{}(f.str());
    }
};
