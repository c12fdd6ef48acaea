#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "conway_sloane.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "param_tuple.hpp"
#include "rational.hpp"

namespace nodaltorus {

// Eigenfunctions on the torus come in conjugate pairs indexed by a lattice
// vector q: an imaginary (sine) part and a real (cosine) part.
enum class Part { im, re };

inline const char* part_name(Part p) { return p == Part::im ? "im" : "re"; }

inline Part parse_part(const std::string& s) {
    if (s == "im")
        return Part::im;
    if (s == "re")
        return Part::re;
    throw InvalidInputError("Part: expected 'im' or 're', got '" + s + "'");
}

// Nodal domain count of the eigenfunction indexed by q: the sine part has
// 2 * sum|q_i| domains, the cosine part one more. The q = 0 sine part
// vanishes identically and has no count.
inline std::int64_t nodal_count(const LatticeVector& q, Part part) {
    if (part == Part::im && is_zero(q))
        throw DegenerateEigenfunctionError(
            "nodal_count: the q = 0 sine eigenfunction is identically zero");
    const std::int64_t m = one_norm(q);
    return part == Part::im ? 2 * m : 2 * m + 1;
}

// (sine count, cosine count) contributed by one representing vector.
using NodalPair = std::pair<std::int64_t, std::int64_t>;

inline NodalPair nodal_pair(const LatticeVector& q) {
    const std::int64_t m = one_norm(q);
    return {2 * m, 2 * m + 1};
}

// One distinct eigenvalue with all its representing vectors. Eigenvalues are
// reported in units of 4*pi^2, i.e. the stored value is q^T Q q; the physical
// eigenvalue is 4*pi^2 times it. The factor is a global constant and plays no
// role in any comparison.
struct SpectrumLine {
    Rational eigenvalue;
    std::vector<LatticeVector> reps;   // ascending lexicographic
    std::vector<NodalPair> nodal_pairs; // aligned with reps

    std::size_t degeneracy() const { return reps.size(); }

    std::vector<NodalPair> sorted_pairs() const {
        auto s = nodal_pairs;
        std::sort(s.begin(), s.end());
        return s;
    }
};

struct Spectrum {
    Sign sign;
    ParamTuple params;
    Rational cutoff;
    std::vector<SpectrumLine> lines; // ascending by eigenvalue

    std::size_t total_reps() const {
        std::size_t n = 0;
        for (const auto& l : lines)
            n += l.reps.size();
        return n;
    }
};

// All eigenvalues <= cutoff (in 4*pi^2 units) of the chosen torus, grouped
// into lines. Deterministic: lines ascend by eigenvalue, reps within a line
// ascend lexicographically.
inline Spectrum build_spectrum(Sign sign, const ParamTuple& p, const Rational& cutoff) {
    const RationalMatrix qmat = conway_sloane::q(sign).eval(p);
    std::map<Rational, SpectrumLine> grouped;
    for (auto& q : enumerate_ball(qmat, cutoff)) {
        Rational ev = qmat.quad_form(q);
        auto [it, inserted] = grouped.try_emplace(ev);
        if (inserted)
            it->second.eigenvalue = std::move(ev);
        it->second.nodal_pairs.push_back(nodal_pair(q));
        it->second.reps.push_back(std::move(q));
    }
    Spectrum s{sign, p, cutoff, {}};
    s.lines.reserve(grouped.size());
    for (auto& [ev, line] : grouped)
        s.lines.push_back(std::move(line));
    return s;
}

// Smallest cutoff whose spectrum has exactly `count` lines: the eigenvalue of
// line `count` itself. Found by doubling, so the result is deterministic.
inline Rational cutoff_for_line_count(Sign sign, const ParamTuple& p, std::size_t count) {
    if (count == 0)
        throw PreconditionError("cutoff_for_line_count: count must be positive");
    const RationalMatrix qmat = conway_sloane::q(sign).eval(p);
    Rational guess = qmat.at(0, 0);
    for (std::size_t i = 1; i < qmat.dim(); ++i)
        guess = std::min(guess, qmat.at(i, i));
    for (int rounds = 0; rounds < 64; ++rounds) {
        const Spectrum s = build_spectrum(sign, p, guess);
        if (s.lines.size() >= count)
            return s.lines[count - 1].eigenvalue;
        guess *= Rational(2);
    }
    throw InternalError("cutoff_for_line_count: doubling search did not terminate");
}

// The nodal sequences of T+ and T- disagree first at this line.
struct FirstDifference {
    Rational eigenvalue;
    std::size_t index; // 1-based position in the shared eigenvalue sequence
    std::vector<NodalPair> plus_pairs;  // sorted ascending
    std::vector<NodalPair> minus_pairs; // sorted ascending
};

struct NodalComparison {
    Spectrum plus;
    Spectrum minus;
    std::optional<FirstDifference> difference;

    std::size_t lines_compared() const { return plus.lines.size(); }
};

// Builds both spectra up to the cutoff, checks they agree as eigenvalue
// multisets (anything else is a bug, the pair is provably isospectral), and
// locates the first line whose nodal-pair multisets differ.
inline NodalComparison compare_nodal(const ParamTuple& p, const Rational& cutoff) {
    NodalComparison cmp{build_spectrum(Sign::plus, p, cutoff),
                        build_spectrum(Sign::minus, p, cutoff), std::nullopt};
    const auto& lp = cmp.plus.lines;
    const auto& lm = cmp.minus.lines;
    if (lp.size() != lm.size()) {
        std::ostringstream os;
        os << "compare_nodal: line counts differ below cutoff " << cutoff << ": " << lp.size()
           << " vs " << lm.size();
        throw IsospectralityViolation(os.str());
    }
    for (std::size_t i = 0; i < lp.size(); ++i) {
        if (lp[i].eigenvalue != lm[i].eigenvalue || lp[i].degeneracy() != lm[i].degeneracy()) {
            std::ostringstream os;
            os << "compare_nodal: line " << (i + 1) << " disagrees: " << lp[i].eigenvalue
               << " (deg " << lp[i].degeneracy() << ") vs " << lm[i].eigenvalue << " (deg "
               << lm[i].degeneracy() << ")";
            throw IsospectralityViolation(os.str());
        }
        if (!cmp.difference) {
            auto sp = lp[i].sorted_pairs();
            auto sm = lm[i].sorted_pairs();
            if (sp != sm)
                cmp.difference = FirstDifference{lp[i].eigenvalue, i + 1, std::move(sp),
                                                 std::move(sm)};
        }
    }
    return cmp;
}

} // namespace nodaltorus
