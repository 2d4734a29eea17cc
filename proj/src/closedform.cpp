#include "l2disc/closedform.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "l2disc/errors.hpp"
#include "l2disc/numtheory.hpp"
#include "l2disc/pointset.hpp"
#include "l2disc/stable_sum.hpp"

namespace l2disc {

namespace {

constexpr int kMaxHammersleyOrder = 40;

void check_order(int m) {
    if (m < 0) throw BadParams("order must be non-negative");
    if (m > kMaxHammersleyOrder)
        throw IntegerOverflow("closed form evaluated past the exact-arithmetic range");
}

Rational frac(long long n, long long d) { return Rational(n, d); }

} // namespace

Rational hammersley_standard_sq_exact(int m) {
    check_order(m);
    return frac(1LL * m * m, 64) + frac(29LL * m, 192) + frac(3, 8) -
           Rational(m) * Rational::pow2(-(m + 4)) + Rational::pow2(-(m + 2)) -
           frac(1, 9) * Rational::pow2(-(2 * m + 3));
}

Rational hammersley_extreme_sq_exact(int m) {
    check_order(m);
    return frac(m, 64) + frac(1, 72) - frac(1, 9) * Rational::pow2(-(2 * m + 4));
}

Rational hammersley_periodic_sq_exact(int m) {
    check_order(m);
    return frac(m, 16) + frac(1, 9) + frac(1, 9) * Rational::pow2(-(2 * m + 2));
}

Rational hammersley_digital_mean_sq_exact(int m) {
    check_order(m);
    return frac(m, 24) + frac(5, 36);
}

Rational hammersley_digital_mean_sq_mbit_exact(int m) {
    check_order(m);
    return frac(m, 24) + frac(3, 8) + Rational::pow2(-(m + 2)) -
           frac(1, 72) * Rational::pow2(-2 * m);
}

double hammersley_standard_sq(int m) { return hammersley_standard_sq_exact(m).to_double(); }
double hammersley_extreme_sq(int m) { return hammersley_extreme_sq_exact(m).to_double(); }
double hammersley_periodic_sq(int m) { return hammersley_periodic_sq_exact(m).to_double(); }
double hammersley_digital_mean_sq(int m) {
    return hammersley_digital_mean_sq_exact(m).to_double();
}
double hammersley_digital_mean_sq_mbit(int m) {
    return hammersley_digital_mean_sq_mbit_exact(m).to_double();
}

HammersleySums hammersley_sums(int m) {
    if (m < 0) throw BadParams("order must be non-negative");
    if (m > 28) throw IntegerOverflow("sum closed forms evaluated past the 128-bit range");
    using I = Rational::Int;
    const I p = I(1) << m;
    const Rational P(p, 1);
    const Rational M(m);

    HammersleySums s;
    s.s1 = Rational(p - 1, 2);
    s.s2 = Rational(intops::mul(p - 1, 2 * p - 1), intops::mul(6, p));
    s.s3 = P / 4 + M / 8 - frac(1, 2) + Rational(1, intops::mul(4, p));
    s.s4 = Rational(intops::mul(p - 1, intops::mul(4, intops::mul(p, p)) + 3 * p * (m - 2) + 2),
                    intops::mul(24, intops::mul(p, p)));
    {
        const I a = 2 * intops::mul(p, p) - 3 * p + 1;
        const I num = intops::add(intops::mul(8, intops::mul(a, a)),
                                  intops::mul(intops::mul(9 * m, p),
                                              intops::add(intops::mul(4, intops::mul(p, p)),
                                                          p * (m - 9) + 4)));
        s.s5 = Rational(num, intops::mul(288, intops::pow(p, 3)));
    }
    s.s6 = Rational(intops::mul(p, p) - 1, 3);
    s.s7 = Rational(intops::mul(intops::mul(p - 1, p - 1), p + 1), intops::mul(6, p));
    {
        const I num = intops::add(
            intops::mul(16, intops::mul(intops::mul(p - 1, p - 1),
                                        2 * intops::mul(p, p) + p - 1)),
            intops::mul(I(9) * m * (m - 1), intops::mul(p, p)));
        s.s8 = Rational(num, intops::mul(288, intops::mul(p, p)));
    }
    {
        const I p2 = intops::mul(p, p);
        const I inner = intops::sub(
            intops::add(intops::sub(intops::sub(intops::mul(3, intops::mul(p2, p2)), p2),
                                    intops::mul(6, intops::pow(p, 3))),
                        6 * p),
            I(2));
        const I num = intops::sub(intops::mul(8, inner), intops::mul(I(3) * m * (3 * m + 1), p2));
        s.s9 = Rational(num, intops::mul(288, p2));
    }
    s.s10 = Rational(intops::add(intops::mul(8, intops::mul(p, p) - 1), I(9) * m * m + 3 * m), 72);
    return s;
}

DirectHammersleySums direct_hammersley_sums(int m) {
    if (m < 0) throw BadParams("order must be non-negative");
    if (m > 14) throw TooManyPoints("direct summation limited to m <= 14");
    using I = Rational::Int;
    const std::int64_t n = std::int64_t(1) << m;
    const PointSet h = hammersley(m);
    // Integer numerators over the common denominator 2^m per coordinate.
    std::vector<std::int64_t> a(n), c(n);
    for (std::int64_t k = 0; k < n; ++k) {
        a[k] = h.exact()->num[2 * k];
        c[k] = h.exact()->num[2 * k + 1];
    }

    I s1x = 0, s1y = 0, s2x = 0, s2y = 0, s3 = 0, s4x = 0, s4y = 0, s5 = 0;
    for (std::int64_t k = 0; k < n; ++k) {
        const I ak = a[k], ck = c[k];
        s1x += ak;
        s1y += ck;
        s2x += ak * ak;
        s2y += ck * ck;
        s3 += ak * ck;
        s4x += ak * ck * ck;
        s4y += ak * ak * ck;
        s5 += ak * ak * ck * ck;
    }
    I s6x = 0, s6y = 0, s7x = 0, s7y = 0, s8x = 0, s8y = 0, s9x = 0, s9y = 0, s10 = 0;
    for (std::int64_t k = 0; k < n; ++k) {
        for (std::int64_t l = 0; l < n; ++l) {
            const I da = a[k] >= a[l] ? a[k] - a[l] : a[l] - a[k];
            const I dc = c[k] >= c[l] ? c[k] - c[l] : c[l] - c[k];
            s6x += da;
            s6y += dc;
            s7x += I(a[k]) * dc;
            s7y += I(c[k]) * da;
            s8x += I(a[k]) * a[k] * dc;
            s8y += I(c[k]) * c[k] * da;
            s9x += I(a[k]) * a[l] * dc;
            s9y += I(c[k]) * c[l] * da;
            s10 += da * dc;
        }
    }

    const I p1 = n, p2 = I(n) * n, p3 = p2 * n, p4 = p2 * p2;
    auto fill = [&](I v1, I v2, I v4, I v6, I v7, I v8, I v9) {
        HammersleySums s;
        s.s1 = Rational(v1, p1);
        s.s2 = Rational(v2, p2);
        s.s3 = Rational(s3, p2);
        s.s4 = Rational(v4, p3);
        s.s5 = Rational(s5, p4);
        s.s6 = Rational(v6, p1);
        s.s7 = Rational(v7, p2);
        s.s8 = Rational(v8, p3);
        s.s9 = Rational(v9, p3);
        s.s10 = Rational(s10, p2);
        return s;
    };
    return {fill(s1x, s2x, s4x, s6x, s7x, s8x, s9x),
            fill(s1y, s2y, s4y, s6y, s7y, s8y, s9y)};
}

namespace {

// sin(pi a / q) via reflection to a/q <= 1/2; avoids the precision loss of
// sin(pi * a / q) near a = q.
double sinpi_frac(std::int64_t a, std::int64_t q) {
    a %= q;
    if (a < 0) a += q;
    if (2 * a > q) a = q - a;
    return std::sin(std::numbers::pi * double(a) / double(q));
}

double cospi2_frac(std::int64_t a, std::int64_t q) {
    a %= q;
    if (a < 0) a += q;
    if (2 * a > q) a = q - a; // cos^2 is symmetric under a -> q - a
    const double c = std::cos(std::numbers::pi * double(a) / double(q));
    return c * c;
}

void check_lattice_args(std::int64_t p, std::int64_t q) {
    if (q < 1) throw NonPositiveModulus("lattice closed form needs q >= 1");
    const std::int64_t pm = ((p % q) + q) % q;
    if (std::gcd(pm == 0 ? q : pm, q) != 1)
        throw NonCoprime("closed form needs gcd(p,q) = 1, got p = " + std::to_string(p) +
                         ", q = " + std::to_string(q));
}

} // namespace

double lattice_trig_sum(std::int64_t p, std::int64_t q) {
    check_lattice_args(p, q);
    const std::int64_t pm = ((p % q) + q) % q;
    StableSum s;
    for (std::int64_t r = 1; r < q; ++r) {
        const double s1 = sinpi_frac(r, q);
        const double s2 = sinpi_frac(r * pm % q, q);
        s.add(1.0 / (s1 * s1 * s2 * s2));
    }
    return s.get();
}

double lattice_cos_trig_sum(std::int64_t p, std::int64_t q) {
    check_lattice_args(p, q);
    const std::int64_t pm = ((p % q) + q) % q;
    StableSum s;
    for (std::int64_t r = 1; r < q; ++r) {
        const double s1 = sinpi_frac(r, q);
        const double s2 = sinpi_frac(r * pm % q, q);
        s.add((1.0 + 2.0 * cospi2_frac(r * pm % q, q)) / (s1 * s1 * s2 * s2));
    }
    return s.get();
}

LatticeClosedForm lattice_closed_form(std::int64_t p, std::int64_t q) {
    check_lattice_args(p, q);
    LatticeClosedForm f;
    f.p = p;
    f.q = q;
    f.trig_sum = lattice_trig_sum(p, q);
    f.cos_trig_sum = lattice_cos_trig_sum(p, q);
    f.dedekind = dedekind_sum(p, q);
    const double q2 = double(q) * double(q);
    const double anchored = f.dedekind + 0.75;
    f.standard_sq =
        f.cos_trig_sum / (16.0 * q2) + anchored * anchored + 1.0 / 18.0 - 1.0 / (144.0 * q2);
    f.extreme_sq = f.trig_sum / (16.0 * q2) + 1.0 / 72.0 - 1.0 / (144.0 * q2);
    f.periodic_sq = f.trig_sum / (4.0 * q2) + 1.0 / 9.0 + 1.0 / (36.0 * q2);
    return f;
}

BilykIdentity bilyk_identity(std::int64_t p, std::int64_t q, std::int64_t truncation) {
    if (q < 2) throw BadParams("identity needs q >= 2");
    check_lattice_args(p, q);
    if (truncation < q) throw BadParams("truncation must be at least q");
    const std::int64_t pm = ((p % q) + q) % q;
    const std::int64_t K = truncation;

    StableSum lhs;
    for (std::int64_t k2 = -K; k2 <= K; ++k2) {
        if (k2 == 0 || k2 % q == 0) continue;
        // k1 runs over the residue class -k2*p mod q inside [-K, K].
        const std::int64_t r = (((-k2 % q) * pm) % q + q) % q;
        const double inv_k2sq = 1.0 / (double(k2) * double(k2));
        std::int64_t k1 = -K + (((r + K) % q + q) % q);
        for (; k1 <= K; k1 += q) {
            if (k1 == 0) continue;
            lhs.add(inv_k2sq / (double(k1) * double(k1)));
        }
    }

    const double pi = std::numbers::pi;
    const double q4 = double(q) * double(q) * double(q) * double(q);
    BilykIdentity out;
    out.lhs_truncated = lhs.get();
    out.rhs = pi * pi * pi * pi / q4 * lattice_trig_sum(p, q);
    // Each discarded term has |k| > K in one index; the other index sums to
    // at most sum_{k != 0} 1/k^2 = pi^2/3, and sum_{|k|>K} 1/k^2 <= 2/K.
    out.tail_bound = 2.0 * (2.0 / double(K)) * (pi * pi / 3.0);
    return out;
}

Rational grid_periodic_sq_exact(std::int64_t m, int d) {
    if (m < 1) throw BadParams("grid resolution must be >= 1");
    if (d < 1) throw DimensionMismatch("grid dimension must be >= 1");
    // (m^2/3 + 1/6)^d - (m^2/3)^d = ((2m^2+1)^d - (2m^2)^d) / 6^d
    const Rational::Int m2 = intops::mul(m, m);
    return Rational(intops::sub(intops::pow(2 * m2 + 1, d), intops::pow(2 * m2, d)),
                    intops::pow(6, d));
}

Rational grid_extreme_sq_exact(std::int64_t m, int d) {
    if (m < 1) throw BadParams("grid resolution must be >= 1");
    if (d < 1) throw DimensionMismatch("grid dimension must be >= 1");
    const Rational::Int m2 = intops::mul(m, m);
    return Rational(intops::sub(intops::pow(m2, d), intops::pow(m2 - 1, d)),
                    intops::pow(12, d));
}

double grid_periodic_sq(std::int64_t m, int d) { return grid_periodic_sq_exact(m, d).to_double(); }
double grid_extreme_sq(std::int64_t m, int d) { return grid_extreme_sq_exact(m, d).to_double(); }

double relation_residual(double periodic_sq, double extreme_sq, std::int64_t n_points) {
    const double n2 = double(n_points) * double(n_points);
    return periodic_sq - 4.0 * extreme_sq - 1.0 / 18.0 - 1.0 / (18.0 * n2);
}

Rational relation_residual_exact(const Rational& periodic_sq, const Rational& extreme_sq,
                                 std::int64_t n_points) {
    const Rational::Int n2 = intops::mul(n_points, n_points);
    return periodic_sq - Rational(4) * extreme_sq - Rational(1, 18) -
           Rational(1, intops::mul(18, n2));
}

double fibonacci_slope_constant() { return 4.0 / (15.0 * std::sqrt(5.0)); }

double eta_constant() {
    const double golden = (std::sqrt(5.0) + 1.0) / 2.0;
    return std::sqrt(1.0 / (60.0 * std::sqrt(5.0) * std::log(golden)));
}

} // namespace l2disc
