#pragma once

#include <cstdint>

#include "l2disc/rational.hpp"

namespace l2disc {

// Closed forms for the 2^m-point Hammersley set, exact rationals.
Rational hammersley_standard_sq_exact(int m);
Rational hammersley_extreme_sq_exact(int m);
Rational hammersley_periodic_sq_exact(int m);
double hammersley_standard_sq(int m);
double hammersley_extreme_sq(int m);
double hammersley_periodic_sq(int m);

// Mean squared standard discrepancy over digital shifts: full-depth shifts
// give m/24 + 5/36; m-bit shifts give m/24 + 3/8 + 1/2^(m+2) - 1/(72*4^m).
Rational hammersley_digital_mean_sq_exact(int m);
Rational hammersley_digital_mean_sq_mbit_exact(int m);
double hammersley_digital_mean_sq(int m);
double hammersley_digital_mean_sq_mbit(int m);

// The ten coordinate sums over the Hammersley set. For the sums with equal
// x- and y-flavoured definitions only one value is stored.
struct HammersleySums {
    Rational s1, s2, s3, s4, s5, s6, s7, s8, s9, s10;

    bool operator==(const HammersleySums&) const = default;
};

// Closed forms as printed.
HammersleySums hammersley_sums(int m);

// Brute-force oracle: explicit summation over the generated point set in
// exact integer arithmetic. `primary` uses the first-listed definition of
// each sum, `swapped` the x<->y mirrored one; both must agree.
struct DirectHammersleySums {
    HammersleySums primary;
    HammersleySums swapped;
};
DirectHammersleySums direct_hammersley_sums(int m);

// Trigonometric sums of the rational-lattice closed forms,
// sum_{r=1}^{q-1} 1/(sin^2(pi r/q) sin^2(pi r p/q)) and the variant with the
// (1 + 2cos^2) numerator.
double lattice_trig_sum(std::int64_t p, std::int64_t q);
double lattice_cos_trig_sum(std::int64_t p, std::int64_t q);

struct LatticeClosedForm {
    std::int64_t p, q;
    double trig_sum;
    double cos_trig_sum;
    double dedekind;
    double standard_sq;
    double extreme_sq;
    double periodic_sq;
};

// All three discrepancies of the q-point lattice {(k/q, {kp/q})}. Requires
// gcd(p,q) = 1; otherwise the trigonometric sums are singular.
LatticeClosedForm lattice_closed_form(std::int64_t p, std::int64_t q);

struct BilykIdentity {
    double lhs_truncated; // double sum over |k1|,|k2| <= K
    double rhs;           // pi^4/q^4 times the trig sum
    double tail_bound;    // bound on the truncation remainder
};

// Lattice double sum against its trigonometric closed form; the identity
// holds with |lhs - rhs| <= tail_bound. Requires q >= 2, gcd(p,q) = 1,
// K >= q.
BilykIdentity bilyk_identity(std::int64_t p, std::int64_t q, std::int64_t truncation);

// Regular grid {0, 1/m, ..., (m-1)/m}^d.
Rational grid_periodic_sq_exact(std::int64_t m, int d);
Rational grid_extreme_sq_exact(std::int64_t m, int d);
double grid_periodic_sq(std::int64_t m, int d);
double grid_extreme_sq(std::int64_t m, int d);

// per^2 - 4*extr^2 - 1/18 - 1/(18 N^2); zero exactly for Hammersley sets
// and rational lattices, nonzero for grids with m >= 2, d = 2.
double relation_residual(double periodic_sq, double extreme_sq, std::int64_t n_points);
Rational relation_residual_exact(const Rational& periodic_sq, const Rational& extreme_sq,
                                 std::int64_t n_points);

// 4/(15 sqrt 5), the limit of trig_sum(F_{n-1},F_n)/(n F_n^2).
double fibonacci_slope_constant();

// sqrt(1/(60 sqrt(5) log((sqrt(5)+1)/2)))
double eta_constant();

} // namespace l2disc
