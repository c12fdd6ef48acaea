#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <sstream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace nodaltorus {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator. Every spectral quantity in this library is one of these; no
// floating point enters any computation.
class Rational {
public:
    Rational() : num_(0), den_(1) {}

    Rational(BigInt num) : num_(std::move(num)), den_(1) {}

    Rational(std::int64_t num) : num_(num), den_(1) {}

    Rational(int num) : num_(num), den_(1) {}

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0)
            throw InvalidInputError("Rational: zero denominator");
        canonicalize();
    }

    Rational(std::int64_t num, std::int64_t den) : Rational(BigInt(num), BigInt(den)) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        canonicalize();
        return *this;
    }

    Rational& operator-=(const Rational& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        canonicalize();
        return *this;
    }

    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        canonicalize();
        return *this;
    }

    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0)
            throw InvalidInputError("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        canonicalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Denominators are positive, so cross-multiplication preserves order.
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const BigInt lhs = a.num_ * b.den_;
        const BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    Rational reciprocal() const {
        if (num_ == 0)
            throw InvalidInputError("Rational: reciprocal of zero");
        return Rational(den_, num_);
    }

    // Canonical text form: "p" for integers, "p/q" otherwise, q > 0.
    std::string str() const {
        std::ostringstream os;
        os << num_;
        if (den_ != 1)
            os << '/' << den_;
        return os.str();
    }

    // Inverse of str(); also accepts unreduced input and normalizes it.
    static Rational parse(std::string_view text) {
        if (text.empty())
            throw InvalidInputError("Rational: empty string");
        const auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rational(BigInt(std::string(text)));
            const BigInt num{std::string(text.substr(0, slash))};
            const BigInt den{std::string(text.substr(slash + 1))};
            return Rational(num, den);
        } catch (const std::exception&) {
            throw InvalidInputError("Rational: cannot parse '" + std::string(text) + "'");
        }
    }

    // Display-only helper for --approx output; never feeds back into results.
    double to_double() const {
        return static_cast<double>(boost::multiprecision::cpp_rational(num_, den_));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    void canonicalize() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num_;
    if (r.den_ != 1)
        os << '/' << r.den_;
    return os;
}

// Smallest non-negative integer k with k*k >= r. Used for enumeration boxes.
inline BigInt isqrt_ceil(const Rational& r) {
    if (r.sign() <= 0)
        return BigInt(0);
    // Floor of r, then sqrt, then adjust upward; the loop runs at most twice.
    const BigInt floor_r = r.num() / r.den();
    BigInt k = boost::multiprecision::sqrt(floor_r);
    while (Rational(k * k) < r)
        ++k;
    return k;
}

} // namespace nodaltorus

template <>
struct std::hash<nodaltorus::Rational> {
    std::size_t operator()(const nodaltorus::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};
