#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "rational.hpp"

namespace nodaltorus {

// Strictly positive parameter 4-tuple (a, b, c, d) selecting one member of
// the isospectral torus family.
class ParamTuple {
public:
    ParamTuple(Rational a, Rational b, Rational c, Rational d)
        : v_{std::move(a), std::move(b), std::move(c), std::move(d)} {
        for (const auto& x : v_)
            if (x.sign() <= 0)
                throw InvalidInputError("ParamTuple: parameters must be positive, got " + x.str());
    }

    const Rational& a() const { return v_[0]; }
    const Rational& b() const { return v_[1]; }
    const Rational& c() const { return v_[2]; }
    const Rational& d() const { return v_[3]; }

    const Rational& operator[](std::size_t i) const { return v_.at(i); }

    static constexpr std::size_t size() { return 4; }

    bool all_distinct() const {
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                if (v_[i] == v_[j])
                    return false;
        return true;
    }

    bool operator==(const ParamTuple& o) const { return v_ == o.v_; }

    // Parses "a,b,c,d" with each entry in canonical rational syntax.
    static ParamTuple parse(std::string_view text) {
        std::array<std::string, 4> parts;
        std::size_t idx = 0;
        std::string cur;
        for (const char ch : text) {
            if (ch == ',') {
                if (idx >= 3)
                    throw InvalidInputError("ParamTuple: expected exactly 4 comma-separated values");
                parts[idx++] = cur;
                cur.clear();
            } else if (ch != ' ') {
                cur += ch;
            }
        }
        if (idx != 3)
            throw InvalidInputError("ParamTuple: expected exactly 4 comma-separated values");
        parts[3] = cur;
        return ParamTuple(Rational::parse(parts[0]), Rational::parse(parts[1]),
                          Rational::parse(parts[2]), Rational::parse(parts[3]));
    }

    std::string str() const {
        return v_[0].str() + "," + v_[1].str() + "," + v_[2].str() + "," + v_[3].str();
    }

private:
    std::array<Rational, 4> v_;
};

} // namespace nodaltorus
