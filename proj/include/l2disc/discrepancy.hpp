#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "l2disc/pointset.hpp"

namespace l2disc {

enum class Summation { naive, compensated };
enum class Kind { standard, extreme, periodic };

std::string to_string(Kind k);
std::string to_string(Summation s);

// Worker count for the pair sums: 0 resolves to the L2DISC_THREADS
// environment variable, defaulting to 1. Results are bit-stable for a fixed
// thread count and agree across thread counts to summation accuracy.
int default_thread_count();

// Squared L2 discrepancies by the direct pair-sum formulas, any dimension.
// Values in (-1e-12, 0) are clamped to zero; lower values throw
// NegativeDiscrepancy.
double l2_standard_sq(const PointSet& ps, Summation mode = Summation::compensated,
                      int threads = 0);
double l2_extreme_sq(const PointSet& ps, Summation mode = Summation::compensated,
                     int threads = 0);
double l2_periodic_sq(const PointSet& ps, Summation mode = Summation::compensated,
                      int threads = 0);

// One-dimensional specializations. The extreme form sorts a copy of the
// points and evaluates 1/12 + (1/2) sum (x_n - x_m - (n-m)/N)^2; the
// periodic form is sum B2(|x_n - x_m|).
double l2_extreme_sq_1d(const PointSet& ps);
double l2_periodic_sq_1d(const PointSet& ps);

// Weight r(k): 1 at k = 0, else 2*pi*|k|/sqrt(6); r(-k) = r(k).
double spectral_weight(std::int64_t k);

struct SpectralResult {
    double value;      // truncated exponential-sum series, underestimates
    double tail_bound; // rigorous bound on the truncated remainder
};

// Truncation of the exponential-sum form of the periodic discrepancy to the
// cube |k_j| <= K. Exact value lies in [value, value + tail_bound].
SpectralResult diaphony_truncated(const PointSet& ps, int truncation);

// Independent oracle: integrates the defining local-discrepancy integral
// exactly, cell by cell, for d = 2 and N <= 16. Wraparound intervals of the
// periodic test boxes are enumerated as separate cells.
double cell_exact_sq(const PointSet& ps, Kind kind);

struct ShiftAverage {
    double mean;
    double std_error;
};

// Monte Carlo means of the standard squared discrepancy over random
// geometric shifts (population mean = periodic discrepancy) and random
// w-digit digital shifts.
ShiftAverage shift_average_geometric(const PointSet& ps, std::int64_t samples,
                                     std::uint64_t seed);
ShiftAverage shift_average_digital(const PointSet& ps, std::int64_t samples, int width,
                                   std::uint64_t seed);

// Exact average over all (2^m)^d digital m-bit shift vectors of an m-bit
// point set; exhaustive enumeration, m*d <= 24.
double digital_mbit_mean_exhaustive(const PointSet& ps, int m);

enum class Method { pair_sum, one_dim_ordered, spectral_truncated, cell_exact, shift_mc };

std::string to_string(Method m);

// Evaluator output bundle as surfaced by the CLI: any subset of the three
// squared discrepancies plus how they were computed.
struct DiscrepancyReport {
    std::size_t n_points = 0;
    int dim = 0;
    std::optional<double> standard_sq;
    std::optional<double> extreme_sq;
    std::optional<double> periodic_sq;
    Method method = Method::pair_sum;
    Summation summation = Summation::compensated;
    std::optional<int> truncation_k;        // spectral_truncated only
    std::optional<std::int64_t> mc_samples; // shift_mc only

    // Enforces the order relations extr <= std and extr <= per whenever the
    // operands are populated; violations past the tolerance mean a broken
    // evaluator.
    void validate(double tol = 1e-9) const;
};

} // namespace l2disc
