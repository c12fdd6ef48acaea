#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"
#include "parallel.hpp"
#include "rational.hpp"
#include "spectral.hpp"

namespace nodaltorus {
namespace oracle {

// Nodal domains are counted on the open unit cube (0,1)^n in lattice
// coordinates -- the fundamental domain cut open, no wraparound. On that
// domain the eigenfunction is sin(2*pi*t) or cos(2*pi*t) with t = <q, y>,
// so its nodal set is a family of parallel hyperplane slabs.

// ---------------------------------------------------------------------------
// Slab oracle: count the zero hyperplanes directly
// ---------------------------------------------------------------------------

// As y ranges over the open cube, t = <q, y> sweeps the open interval
// (-neg, pos) where neg/pos sum the negative/positive parts of q; each zero
// level of the 1-D factor strictly inside that interval is one separating
// hyperplane slab, and k separators cut the (connected) domain into k + 1
// pieces. The levels are counted one by one, not in closed form, so this is
// an independent check of the nodal-count formula.
inline std::int64_t slab_count(const LatticeVector& q, Part part) {
    if (is_zero(q))
        throw PreconditionError("slab_count: q must be nonzero");
    std::int64_t neg = 0, pos = 0;
    for (const auto x : q)
        (x < 0 ? neg : pos) += x < 0 ? -x : x;
    // sin zero levels: t = k/2; cos zero levels: t = (2k+1)/4.
    const Rational lo(-neg), hi(pos);
    std::int64_t separators = 0;
    if (part == Part::im) {
        for (std::int64_t k = -2 * neg; k <= 2 * pos; ++k) {
            const Rational level(k, 2);
            if (lo < level && level < hi)
                ++separators;
        }
    } else {
        for (std::int64_t k = -2 * neg - 1; k <= 2 * pos; ++k) {
            const Rational level(2 * k + 1, 4);
            if (lo < level && level < hi)
                ++separators;
        }
    }
    return separators + 1;
}

// ---------------------------------------------------------------------------
// Grid flood-fill oracle: rasterize and count connected sign regions
// ---------------------------------------------------------------------------

// Sampling grid: cell k has center ((k_0 + o_0)/res, ..., (k_{n-1} + o_{n-1})/res).
struct GridSpec {
    std::size_t dim = 0;
    std::int64_t res = 0;
    std::vector<Rational> offsets; // per axis, each strictly inside (0, 1)

    static GridSpec uniform(std::size_t dim, std::int64_t res,
                            const Rational& offset = Rational(1, 2)) {
        GridSpec g{dim, res, std::vector<Rational>(dim, offset)};
        g.validate();
        return g;
    }

    // Offsets 1/2 + (4*res)^-(i+1): the base-(4*res) digit tails can never
    // conspire back onto a zero level for any nonzero q with sum |q_i| well
    // below res, so this rung of the retry ladder cannot degenerate.
    static GridSpec staggered(std::size_t dim, std::int64_t res) {
        GridSpec g{dim, res, {}};
        Rational eps(1, 4 * res);
        Rational tail = eps;
        for (std::size_t i = 0; i < dim; ++i) {
            g.offsets.push_back(Rational(1, 2) + tail);
            tail *= eps;
        }
        g.validate();
        return g;
    }

    void validate() const {
        if (dim == 0)
            throw InvalidInputError("GridSpec: dimension must be positive");
        if (res < 2)
            throw InvalidInputError("GridSpec: resolution must be at least 2");
        if (offsets.size() != dim)
            throw InvalidInputError("GridSpec: need one offset per axis");
        for (const auto& o : offsets)
            if (o.sign() <= 0 || o >= Rational(1))
                throw InvalidInputError("GridSpec: offsets must lie strictly inside (0, 1)");
    }
};

namespace detail {

// Exact sign of sin(2*pi*t) (or cos) at t = num/den, den > 0, via the
// position of t within its period. Returns -1, 0, +1.
inline int sign_sin(std::int64_t num, std::int64_t den) {
    std::int64_t u = num % den;
    if (u < 0)
        u += den;
    if (u == 0 || 2 * u == den)
        return 0;
    return 2 * u < den ? 1 : -1;
}

inline int sign_cos(std::int64_t num, std::int64_t den) {
    std::int64_t u = num % den;
    if (u < 0)
        u += den;
    const std::int64_t w = 4 * u;
    if (w == den || w == 3 * den)
        return 0;
    return (w < den || w > 3 * den) ? 1 : -1;
}

} // namespace detail

// Rasterizes the eigenfunction's sign on the grid and counts face-connected
// components of equal sign inside the open cube (no wraparound). Every sign
// is evaluated exactly in integer arithmetic; a cell center that lands on
// the zero set raises GridDegeneracyError so the caller can re-offset.
// This oracle knows nothing about slabs or formulas -- it just walks cells.
inline std::int64_t floodfill_count(const LatticeVector& q, Part part, const GridSpec& grid) {
    grid.validate();
    if (q.size() != grid.dim)
        throw DimensionMismatchError("floodfill_count: q and grid dimension differ");
    if (is_zero(q))
        throw PreconditionError("floodfill_count: q must be nonzero");
    const std::int64_t m = one_norm(q);
    if (grid.res < 8 * m)
        throw PreconditionError("floodfill_count: resolution below 8 * |q|_1; "
                                "slabs thinner than cells cannot be resolved");

    const std::size_t dim = grid.dim;
    const std::int64_t n = grid.res;
    double cells_estimate = 1.0;
    for (std::size_t i = 0; i < dim; ++i)
        cells_estimate *= static_cast<double>(n);
    if (cells_estimate > static_cast<double>(1 << 26))
        throw InvalidInputError("floodfill_count: grid exceeds the cell limit");

    // t = <q, center(k)> = (scale * sum q_i k_i + shift) / den with
    // scale = lcm of offset denominators, den = res * scale; everything is
    // precomputed in big integers and checked to fit the int64 hot loop.
    BigInt scale_big = 1;
    for (const auto& o : grid.offsets)
        scale_big = boost::multiprecision::lcm(scale_big, o.den());
    BigInt den_big = scale_big * n;
    BigInt shift_big = 0;
    for (std::size_t i = 0; i < dim; ++i)
        shift_big += q[i] * (grid.offsets[i].num() * (scale_big / grid.offsets[i].den()));
    // |t numerator| bound: m * (n + 1) * scale + |shift|
    const BigInt tmax = scale_big * m * (n + 1) + boost::multiprecision::abs(shift_big);
    if (4 * std::max(tmax, den_big) >= BigInt(std::int64_t(1) << 60))
        throw InvalidInputError("floodfill_count: grid offsets too fine for exact evaluation");
    const std::int64_t scale = static_cast<std::int64_t>(scale_big);
    const std::int64_t den = static_cast<std::int64_t>(den_big);
    const std::int64_t shift = static_cast<std::int64_t>(shift_big);

    std::size_t total = 1;
    std::vector<std::size_t> stride(dim);
    for (std::size_t i = dim; i-- > 0;) {
        stride[i] = total;
        total *= static_cast<std::size_t>(n);
    }

    // Pass 1: signs. Row-major odometer keeps s = sum q_i k_i incrementally.
    std::vector<bool> positive(total);
    std::vector<std::int64_t> k(dim, 0);
    std::int64_t s = 0;
    for (std::size_t idx = 0;; ++idx) {
        const std::int64_t num = scale * s + shift;
        const int sign = part == Part::im ? detail::sign_sin(num, den)
                                          : detail::sign_cos(num, den);
        if (sign == 0) {
            std::ostringstream os;
            os << "floodfill_count: cell center on the zero set at index " << idx;
            throw GridDegeneracyError(os.str());
        }
        positive[idx] = sign > 0;
        if (idx + 1 == total)
            break;
        // odometer step
        std::size_t axis = dim;
        while (axis-- > 0) {
            if (++k[axis] < n) {
                s += q[axis];
                break;
            }
            k[axis] = 0;
            s -= q[axis] * (n - 1);
        }
    }

    // Pass 2: count components among face neighbors of equal sign.
    std::vector<bool> visited(total);
    std::vector<std::size_t> stack;
    std::int64_t components = 0;
    for (std::size_t seed = 0; seed < total; ++seed) {
        if (visited[seed])
            continue;
        ++components;
        visited[seed] = true;
        stack.push_back(seed);
        const bool sign = positive[seed];
        while (!stack.empty()) {
            const std::size_t cur = stack.back();
            stack.pop_back();
            for (std::size_t i = 0; i < dim; ++i) {
                const std::size_t coord = (cur / stride[i]) % static_cast<std::size_t>(n);
                if (coord > 0) {
                    const std::size_t nb = cur - stride[i];
                    if (!visited[nb] && positive[nb] == sign) {
                        visited[nb] = true;
                        stack.push_back(nb);
                    }
                }
                if (coord + 1 < static_cast<std::size_t>(n)) {
                    const std::size_t nb = cur + stride[i];
                    if (!visited[nb] && positive[nb] == sign) {
                        visited[nb] = true;
                        stack.push_back(nb);
                    }
                }
            }
        }
    }
    return components;
}

// ---------------------------------------------------------------------------
// Formula validation harness
// ---------------------------------------------------------------------------

struct GridPolicy {
    std::int64_t res_multiplier = 8; // resolution = multiplier * |q|_1 ...
    std::int64_t min_res = 16;       // ... clamped into [min_res, max_res]
    std::int64_t max_res = 64;

    std::int64_t res_for(std::int64_t m) const {
        const std::int64_t want = res_multiplier * m;
        if (want > max_res)
            throw PreconditionError("GridPolicy: |q|_1 too large for max_res");
        return std::max(want, min_res);
    }
};

// Offset retry ladder: centered cells first, then nudged, then the staggered
// spec that provably cannot degenerate.
inline std::int64_t floodfill_with_retry(const LatticeVector& q, Part part, std::int64_t res,
                                         std::string* grid_note = nullptr) {
    const std::size_t dim = q.size();
    const Rational half(1, 2), nudge(1, 4 * res);
    const std::array<GridSpec, 4> ladder = {
        GridSpec::uniform(dim, res, half),
        GridSpec::uniform(dim, res, half + nudge),
        GridSpec::uniform(dim, res, half - nudge),
        GridSpec::staggered(dim, res),
    };
    const char* const names[] = {"uniform", "uniform+nudge", "uniform-nudge", "staggered"};
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        try {
            const std::int64_t count = floodfill_count(q, part, ladder[i]);
            if (grid_note)
                *grid_note = names[i];
            return count;
        } catch (const GridDegeneracyError&) {
            if (i + 1 == ladder.size())
                throw;
        }
    }
    throw InternalError("floodfill_with_retry: unreachable");
}

enum class FormulaVariant { standard, drop_plus_one };

struct ValidationRow {
    LatticeVector q;
    Part part = Part::im;
    std::int64_t formula = 0;
    std::int64_t slab = 0;
    std::int64_t floodfill = 0;
    std::int64_t res = 0;
    std::string grid;
    bool match = false;
};

struct ValidationReport {
    std::int64_t max_m = 0;
    FormulaVariant variant = FormulaVariant::standard;
    std::vector<ValidationRow> rows;
    std::size_t mismatches = 0;
    bool pass = false;
};

// Checks the closed-form nodal count against both oracles for every
// canonical q with |q|_1 <= max_m (one of each {q, -q} pair: the
// eigenfunctions differ only by sign, so the counts coincide) in the full
// 4-dimensional torus. The drop_plus_one variant feeds a deliberately broken
// formula through the same pipeline to prove the harness can fail.
inline ValidationReport validate_formula(std::int64_t max_m, const GridPolicy& policy = {},
                                         FormulaVariant variant = FormulaVariant::standard) {
    if (max_m < 1)
        throw PreconditionError("validate_formula: max_m must be >= 1");
    ValidationReport rep;
    rep.max_m = max_m;
    rep.variant = variant;
    for (std::int64_t m = 1; m <= max_m; ++m) {
        const std::int64_t res = policy.res_for(m); // fail fast before enumerating
        for (const auto& q : enumerate_v_m(4, m)) {
            if (!is_canonical_rep(q))
                continue;
            for (const Part part : {Part::im, Part::re}) {
                ValidationRow row;
                row.q = q;
                row.part = part;
                row.res = res;
                row.formula = variant == FormulaVariant::standard ? nodal_count(q, part)
                                                                  : 2 * one_norm(q);
                rep.rows.push_back(std::move(row));
            }
        }
    }
    parallel_for(rep.rows.size(), [&](std::size_t i) {
        ValidationRow& row = rep.rows[i];
        row.slab = slab_count(row.q, row.part);
        row.floodfill = floodfill_with_retry(row.q, row.part, row.res, &row.grid);
        row.match = row.formula == row.slab && row.formula == row.floodfill;
    });
    for (const auto& row : rep.rows)
        if (!row.match)
            ++rep.mismatches;
    rep.pass = rep.mismatches == 0;
    return rep;
}

} // namespace oracle
} // namespace nodaltorus
