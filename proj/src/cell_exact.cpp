#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "l2disc/discrepancy.hpp"
#include "l2disc/errors.hpp"
#include "l2disc/stable_sum.hpp"

namespace l2disc {

// Direct integration of the defining integrals for d = 2. The counting
// function is constant on the open cells cut out by the point coordinates,
// and on each cell the local discrepancy squared is a polynomial of degree
// at most 2 per parameter, so every cell integrates in closed form. This
// shares no code or algebra with the pair-sum evaluators.

namespace {

// One cell of the per-axis parameter domain: mask marks the points whose
// axis interval membership is constant 1 on the cell, and m0/m1/m2 are the
// integrals of 1, lambda, lambda^2 over the cell, lambda being the axis
// measure factor (t for anchored boxes, interval length otherwise).
struct AxisCell {
    std::uint32_t mask;
    double m0, m1, m2;
};

struct Moments {
    double m0, m1, m2; // integrals of 1, t, t^2 over an interval
};

Moments interval_moments(double a, double b) {
    return {b - a, (b * b - a * a) / 2.0, (b * b * b - a * a * a) / 3.0};
}

std::vector<double> breakpoints(const PointSet& ps, int axis) {
    std::vector<double> b{0.0, 1.0};
    for (std::size_t k = 0; k < ps.size(); ++k) b.push_back(ps(k, axis));
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
}

std::uint32_t mask_leq(const PointSet& ps, int axis, double v) {
    std::uint32_t m = 0;
    for (std::size_t k = 0; k < ps.size(); ++k)
        if (ps(k, axis) <= v) m |= std::uint32_t(1) << k;
    return m;
}

std::uint32_t mask_geq(const PointSet& ps, int axis, double v) {
    std::uint32_t m = 0;
    for (std::size_t k = 0; k < ps.size(); ++k)
        if (ps(k, axis) >= v) m |= std::uint32_t(1) << k;
    return m;
}

// Anchored boxes [0,t): one parameter per axis; a point is counted on
// t in (B_i, B_{i+1}) iff its coordinate is <= B_i.
std::vector<AxisCell> standard_cells(const PointSet& ps, int axis) {
    const auto b = breakpoints(ps, axis);
    std::vector<AxisCell> cells;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        const Moments mo = interval_moments(b[i], b[i + 1]);
        cells.push_back({mask_leq(ps, axis, b[i]), mo.m0, mo.m1, mo.m2});
    }
    return cells;
}

// Boxes [u,v) with u <= v: cells are interval pairs (i <= j); on the
// diagonal the domain is the triangle u <= v. Membership on a cell is
// coordinate >= B_{i+1} and coordinate <= B_j; lambda = v - u.
std::vector<AxisCell> extreme_cells(const PointSet& ps, int axis) {
    const auto b = breakpoints(ps, axis);
    const std::size_t m = b.size() - 1; // interval count
    std::vector<AxisCell> cells;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            AxisCell c;
            c.mask = mask_geq(ps, axis, b[i + 1]) & mask_leq(ps, axis, b[j]);
            if (i == j) {
                const double h = b[i + 1] - b[i];
                c.m0 = h * h / 2.0;
                c.m1 = h * h * h / 6.0;
                c.m2 = h * h * h * h / 12.0;
            } else {
                const Moments u = interval_moments(b[i], b[i + 1]);
                const Moments v = interval_moments(b[j], b[j + 1]);
                c.m0 = u.m0 * v.m0;
                c.m1 = u.m0 * v.m1 - u.m1 * v.m0;
                c.m2 = u.m0 * v.m2 - 2.0 * u.m1 * v.m1 + u.m2 * v.m0;
            }
            cells.push_back(c);
        }
    }
    return cells;
}

// Torus intervals I(u,v): the u <= v cells coincide with the extreme ones;
// u > v wraps to [0,v) u [u,1) with lambda = 1 - (u - v) and membership
// coordinate <= B_j or coordinate >= B_{i+1}.
std::vector<AxisCell> periodic_cells(const PointSet& ps, int axis) {
    const auto b = breakpoints(ps, axis);
    const std::size_t m = b.size() - 1;
    std::vector<AxisCell> cells = extreme_cells(ps, axis);
    for (std::size_t i = 0; i < m; ++i) {     // u interval
        for (std::size_t j = 0; j <= i; ++j) { // v interval
            AxisCell c;
            c.mask = mask_leq(ps, axis, b[j]) | mask_geq(ps, axis, b[i + 1]);
            if (i == j) {
                const double h = b[i + 1] - b[i];
                // integrals of (1 - (u-v))^s over the triangle v < u
                c.m0 = h * h / 2.0;
                c.m1 = h * h / 2.0 - h * h * h / 6.0;
                c.m2 = h * h / 2.0 - h * h * h / 3.0 + h * h * h * h / 12.0;
            } else {
                const Moments u = interval_moments(b[i], b[i + 1]);
                const Moments v = interval_moments(b[j], b[j + 1]);
                const double w0 = u.m0 * v.m0;                           // int 1
                const double w1 = u.m0 * v.m1 - u.m1 * v.m0;             // int (v-u)
                const double w2 = u.m0 * v.m2 - 2.0 * u.m1 * v.m1 + u.m2 * v.m0;
                c.m0 = w0;
                c.m1 = w0 + w1;
                c.m2 = w0 + 2.0 * w1 + w2;
            }
            cells.push_back(c);
        }
    }
    return cells;
}

} // namespace

double cell_exact_sq(const PointSet& ps, Kind kind) {
    if (ps.dim() != 2)
        throw DimensionMismatch("cell-exact oracle handles d = 2 only, got d = " +
                                std::to_string(ps.dim()));
    if (ps.size() > 16)
        throw TooManyPoints("cell-exact oracle limited to 16 points, got " +
                            std::to_string(ps.size()));

    std::vector<AxisCell> ax, ay;
    switch (kind) {
        case Kind::standard:
            ax = standard_cells(ps, 0);
            ay = standard_cells(ps, 1);
            break;
        case Kind::extreme:
            ax = extreme_cells(ps, 0);
            ay = extreme_cells(ps, 1);
            break;
        case Kind::periodic:
            ax = periodic_cells(ps, 0);
            ay = periodic_cells(ps, 1);
            break;
    }

    const double n = double(ps.size());
    StableSum total;
    for (const AxisCell& cx : ax) {
        for (const AxisCell& cy : ay) {
            const double a = double(std::popcount(cx.mask & cy.mask));
            total.add(a * a * cx.m0 * cy.m0 - 2.0 * n * a * cx.m1 * cy.m1 +
                      n * n * cx.m2 * cy.m2);
        }
    }
    const double v = total.get();
    return v < 0.0 && v > -1e-12 ? 0.0 : v;
}

} // namespace l2disc
