#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace l2disc {

// Exact rational coordinates kept alongside the doubles by the generators:
// coordinate (k,i) equals num[k*dim+i] / den[i] exactly. Shift operations
// drop this metadata.
struct ExactCoords {
    std::vector<std::int64_t> num;
    std::vector<std::int64_t> den; // one denominator per axis
};

// N ordered points in [0,1)^d, row-major. Point order is meaningful; the
// one-dimensional ordered formulas sort a copy, never the original.
class PointSet {
  public:
    PointSet(int dim, std::vector<double> coords,
             std::optional<ExactCoords> exact = std::nullopt);

    int dim() const { return dim_; }
    std::size_t size() const { return coords_.size() / dim_; }
    double operator()(std::size_t k, int i) const { return coords_[k * dim_ + i]; }
    const std::vector<double>& coords() const { return coords_; }
    const std::optional<ExactCoords>& exact() const { return exact_; }

  private:
    int dim_;
    std::vector<double> coords_;
    std::optional<ExactCoords> exact_;
};

// Base-2 digit reversal: k = k0 + k1*2 + ... maps to k0/2 + k1/4 + ...
double van_der_corput(std::uint64_t k);

// {(k/2^m, van_der_corput(k)) : k = 0..2^m-1}
PointSet hammersley(int m);

// {(k/q, {k p/q}) : k = 0..q-1}; fractional parts via k*p mod q.
// gcd(p,q) != 1 is allowed here (the closed forms reject it separately).
PointSet rational_lattice(std::int64_t p, std::int64_t q);

// rational_lattice(F(n-1) mod F(n), F(n))
PointSet fibonacci_lattice(int n);

// {0, 1/m, ..., (m-1)/m}^d in lexicographic order.
PointSet regular_grid(int m, int d);

// Componentwise fractional part of (x + delta).
PointSet geometric_shift(const PointSet& ps, const std::vector<double>& delta);

// Per-coordinate dyadic digit vector of fixed width w (1..64). Digits are
// indexed 1..w from the most significant; value(axis) = sum delta_i 2^-i.
class DyadicShift {
  public:
    DyadicShift(int dim, int width, std::vector<std::uint64_t> words);

    static DyadicShift zero(int dim, int width);
    static DyadicShift random(int dim, int width, std::mt19937_64& rng);

    int dim() const { return dim_; }
    int width() const { return width_; }
    std::uint64_t word(int axis) const { return words_[axis]; }
    int digit(int axis, int i) const; // i in 1..width
    double value(int axis) const;

  private:
    int dim_;
    int width_;
    std::vector<std::uint64_t> words_;
};

// XOR of the first w dyadic digits of every coordinate with the shift's
// digits. Coordinates with digits beyond position w raise
// InexactDyadicRepresentation unless truncate is set, in which case those
// digits are dropped first. Shifted digits below position 53 are truncated
// away so the result stays a double; on the 2^-53 coordinate grid (all
// generators here) the operation is an exact involution.
PointSet digital_shift(const PointSet& ps, const DyadicShift& delta, bool truncate = false);

// Seeded i.i.d. uniforms on the 2^-53 grid; identical seed, identical set.
PointSet random_pointset(std::size_t n, int d, std::uint64_t seed);

// Text format: header "# d=<d> N=<N>", then one point per line with
// 17-significant-digit coordinates. Round-trips doubles exactly.
void write_pointset(std::ostream& os, const PointSet& ps);
PointSet read_pointset(std::istream& is);
void write_pointset_file(const std::string& path, const PointSet& ps);
PointSet read_pointset_file(const std::string& path);

} // namespace l2disc
