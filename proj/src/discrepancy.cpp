#include "l2disc/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>
#include <vector>

#include "l2disc/errors.hpp"
#include "l2disc/stable_sum.hpp"

namespace l2disc {

std::string to_string(Kind k) {
    switch (k) {
        case Kind::standard: return "standard";
        case Kind::extreme: return "extreme";
        case Kind::periodic: return "periodic";
    }
    return "?";
}

std::string to_string(Summation s) {
    return s == Summation::naive ? "naive" : "compensated";
}

std::string to_string(Method m) {
    switch (m) {
        case Method::pair_sum: return "pair_sum";
        case Method::one_dim_ordered: return "one_dim_ordered";
        case Method::spectral_truncated: return "spectral_truncated";
        case Method::cell_exact: return "cell_exact";
        case Method::shift_mc: return "shift_mc";
    }
    return "?";
}

void DiscrepancyReport::validate(double tol) const {
    if (extreme_sq && standard_sq && *extreme_sq > *standard_sq + tol)
        throw NegativeDiscrepancy("extreme discrepancy exceeds the standard one");
    if (extreme_sq && periodic_sq && *extreme_sq > *periodic_sq + tol)
        throw NegativeDiscrepancy("extreme discrepancy exceeds the periodic one");
}

int default_thread_count() {
    if (const char* env = std::getenv("L2DISC_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

namespace {

double finalize_sq(double v) {
    if (v < 0.0) {
        if (v < -1e-12)
            throw NegativeDiscrepancy("squared discrepancy evaluated to " + std::to_string(v));
        return 0.0;
    }
    return v;
}

// 3^d and 12^d are exact in double for every dimension the evaluators see.
double int_pow(double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// Symmetric pair sum: diagonal terms once, off-diagonal doubled. Work is
// chunked over contiguous k-ranges with balanced pair counts and the chunk
// results are merged in index order, so the value is reproducible for a
// fixed thread count.
template <class Acc, class Term>
double sum_pairs(std::size_t n, int threads, Term term) {
    auto run_range = [&](std::size_t lo, std::size_t hi) {
        Acc acc;
        for (std::size_t k = lo; k < hi; ++k) {
            acc.add(term(k, k));
            for (std::size_t l = k + 1; l < n; ++l) acc.add(2.0 * term(k, l));
        }
        return acc.get();
    };

    if (threads <= 1 || n < 256) return run_range(0, n);

    const std::size_t t = std::min<std::size_t>(threads, n);
    // Split k so every chunk covers about the same number of pairs.
    std::vector<std::size_t> bounds{0};
    const double total = 0.5 * double(n) * double(n + 1);
    std::size_t k = 0;
    double done = 0.0;
    for (std::size_t c = 1; c < t; ++c) {
        const double target = total * double(c) / double(t);
        while (k < n && done < target) done += double(n - k++);
        bounds.push_back(k);
    }
    bounds.push_back(n);

    std::vector<double> partial(t, 0.0);
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (std::size_t c = 0; c < t; ++c)
        pool.emplace_back([&, c] { partial[c] = run_range(bounds[c], bounds[c + 1]); });
    for (auto& th : pool) th.join();

    Acc acc;
    for (double p : partial) acc.add(p);
    return acc.get();
}

template <class Acc, class Single>
double sum_points(std::size_t n, Single f) {
    Acc acc;
    for (std::size_t k = 0; k < n; ++k) acc.add(f(k));
    return acc.get();
}

struct StandardKernel {
    static double single(const PointSet& ps, std::size_t k) {
        double p = 1.0;
        for (int i = 0; i < ps.dim(); ++i) p *= 1.0 - ps(k, i) * ps(k, i);
        return p;
    }
    static double pair(const PointSet& ps, std::size_t k, std::size_t l) {
        double p = 1.0;
        for (int i = 0; i < ps.dim(); ++i) p *= 1.0 - std::max(ps(k, i), ps(l, i));
        return p;
    }
};

struct ExtremeKernel {
    static double single(const PointSet& ps, std::size_t k) {
        double p = 1.0;
        for (int i = 0; i < ps.dim(); ++i) p *= ps(k, i) * (1.0 - ps(k, i));
        return p;
    }
    static double pair(const PointSet& ps, std::size_t k, std::size_t l) {
        double p = 1.0;
        for (int i = 0; i < ps.dim(); ++i)
            p *= std::min(ps(k, i), ps(l, i)) - ps(k, i) * ps(l, i);
        return p;
    }
};

template <class Kernel>
double kernel_sum_eval(const PointSet& ps, double anchored_const, Summation mode, int threads) {
    const std::size_t n = ps.size();
    const int d = ps.dim();
    if (threads == 0) threads = default_thread_count();
    auto single = [&](std::size_t k) { return Kernel::single(ps, k); };
    auto pair = [&](std::size_t k, std::size_t l) { return Kernel::pair(ps, k, l); };
    double s, p;
    if (mode == Summation::compensated) {
        s = sum_points<StableSum>(n, single);
        p = sum_pairs<StableSum>(n, threads, pair);
    } else {
        s = sum_points<PlainSum>(n, single);
        p = sum_pairs<PlainSum>(n, threads, pair);
    }
    const double value =
        double(n) * double(n) / anchored_const - double(n) / int_pow(2.0, d - 1) * s + p;
    return finalize_sq(value);
}

} // namespace

double l2_standard_sq(const PointSet& ps, Summation mode, int threads) {
    return kernel_sum_eval<StandardKernel>(ps, int_pow(3.0, ps.dim()), mode, threads);
}

double l2_extreme_sq(const PointSet& ps, Summation mode, int threads) {
    return kernel_sum_eval<ExtremeKernel>(ps, int_pow(12.0, ps.dim()), mode, threads);
}

double l2_periodic_sq(const PointSet& ps, Summation mode, int threads) {
    const std::size_t n = ps.size();
    const int d = ps.dim();
    if (threads == 0) threads = default_thread_count();
    // The -N^2/3^d constant is folded into the pair terms so the O(N^2)
    // positive sum never meets one catastrophic subtraction.
    const double inv3d = 1.0 / int_pow(3.0, d);
    auto pair = [&](std::size_t k, std::size_t l) {
        double p = 1.0;
        for (int i = 0; i < d; ++i) {
            const double diff = std::abs(ps(k, i) - ps(l, i));
            p *= 0.5 - diff + diff * diff;
        }
        return p - inv3d;
    };
    const double value = mode == Summation::compensated
                             ? sum_pairs<StableSum>(n, threads, pair)
                             : sum_pairs<PlainSum>(n, threads, pair);
    return finalize_sq(value);
}

double l2_extreme_sq_1d(const PointSet& ps) {
    if (ps.dim() != 1)
        throw DimensionMismatch("ordered extreme formula needs d = 1, got d = " +
                                std::to_string(ps.dim()));
    std::vector<double> x(ps.coords());
    std::sort(x.begin(), x.end());
    const std::size_t n = x.size();
    StableSum s;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const double t = x[a] - x[b] - (double(a) - double(b)) / double(n);
            s.add(t * t);
        }
    return finalize_sq(1.0 / 12.0 + 0.5 * s.get());
}

double l2_periodic_sq_1d(const PointSet& ps) {
    if (ps.dim() != 1)
        throw DimensionMismatch("1-d periodic formula needs d = 1, got d = " +
                                std::to_string(ps.dim()));
    const std::size_t n = ps.size();
    StableSum s;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const double t = std::abs(ps(a, 0) - ps(b, 0));
            s.add(t * t - t + 1.0 / 6.0);
        }
    return finalize_sq(s.get());
}

double spectral_weight(std::int64_t k) {
    if (k == 0) return 1.0;
    return 2.0 * std::numbers::pi * double(k < 0 ? -k : k) / std::sqrt(6.0);
}

SpectralResult diaphony_truncated(const PointSet& ps, int truncation) {
    if (truncation < 1) throw BadParams("spectral truncation must be >= 1");
    const std::size_t n = ps.size();
    const int d = ps.dim();
    const double two_pi = 2.0 * std::numbers::pi;

    // 1/r(k)^2 per axis for k = 0..K.
    std::vector<double> inv_r2(std::size_t(truncation) + 1);
    inv_r2[0] = 1.0;
    for (int k = 1; k <= truncation; ++k)
        inv_r2[k] = 3.0 / (2.0 * std::numbers::pi * std::numbers::pi * double(k) * double(k));

    std::vector<int> kvec(d, -truncation);
    StableSum total;
    for (;;) {
        bool zero = true;
        double weight = 1.0;
        for (int i = 0; i < d; ++i) {
            const int a = kvec[i] < 0 ? -kvec[i] : kvec[i];
            if (a != 0) zero = false;
            weight *= inv_r2[a];
        }
        if (!zero) {
            double re = 0.0, im = 0.0;
            for (std::size_t h = 0; h < n; ++h) {
                double phase = 0.0;
                for (int i = 0; i < d; ++i) phase += double(kvec[i]) * ps(h, i);
                re += std::cos(two_pi * phase);
                im += std::sin(two_pi * phase);
            }
            total.add(weight * (re * re + im * im));
        }
        int i = 0;
        while (i < d && ++kvec[i] > truncation) kvec[i++] = -truncation;
        if (i == d) break;
    }

    const double inv3d = 1.0 / int_pow(3.0, d);
    // Per axis: full weight sum is 3/2 and the |k| > K remainder is at most
    // 3/(pi^2 K); the box remainder follows from (3/2)^d - (3/2 - t)^d with
    // |exp sum|^2 <= N^2.
    const double t = 3.0 / (std::numbers::pi * std::numbers::pi * double(truncation));
    const double tail =
        double(n) * double(n) * inv3d * (int_pow(1.5, d) - int_pow(1.5 - t, d));
    return {finalize_sq(inv3d * total.get()), tail};
}

ShiftAverage shift_average_geometric(const PointSet& ps, std::int64_t samples,
                                     std::uint64_t seed) {
    if (samples < 2) throw BadParams("shift averaging needs at least 2 samples");
    std::mt19937_64 rng(seed);
    const int d = ps.dim();
    std::vector<double> delta(d);
    std::vector<double> values;
    values.reserve(std::size_t(samples));
    for (std::int64_t r = 0; r < samples; ++r) {
        for (auto& dl : delta) dl = double(rng() >> 11) * 0x1p-53;
        values.push_back(l2_standard_sq(geometric_shift(ps, delta)));
    }
    StableSum sum;
    for (double v : values) sum.add(v);
    const double mean = sum.get() / double(samples);
    StableSum var;
    for (double v : values) var.add((v - mean) * (v - mean));
    return {mean, std::sqrt(var.get() / double(samples - 1) / double(samples))};
}

ShiftAverage shift_average_digital(const PointSet& ps, std::int64_t samples, int width,
                                   std::uint64_t seed) {
    if (samples < 2) throw BadParams("shift averaging needs at least 2 samples");
    std::mt19937_64 rng(seed);
    const int d = ps.dim();
    // Surfaces InexactDyadicRepresentation before any sampling happens.
    digital_shift(ps, DyadicShift::zero(d, width));
    std::vector<double> values;
    values.reserve(std::size_t(samples));
    for (std::int64_t r = 0; r < samples; ++r) {
        const DyadicShift delta = DyadicShift::random(d, width, rng);
        values.push_back(l2_standard_sq(digital_shift(ps, delta)));
    }
    StableSum sum;
    for (double v : values) sum.add(v);
    const double mean = sum.get() / double(samples);
    StableSum var;
    for (double v : values) var.add((v - mean) * (v - mean));
    return {mean, std::sqrt(var.get() / double(samples - 1) / double(samples))};
}

double digital_mbit_mean_exhaustive(const PointSet& ps, int m) {
    if (m < 0) throw BadParams("shift depth must be non-negative");
    const int d = ps.dim();
    if (m * d > 24) throw BadParams("exhaustive shift enumeration limited to m*d <= 24");
    if (m == 0) return l2_standard_sq(ps);
    const std::uint64_t per_axis = std::uint64_t(1) << m;
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= per_axis;
    StableSum sum;
    std::vector<std::uint64_t> words(d, 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t rest = idx;
        for (int i = 0; i < d; ++i) {
            words[i] = rest % per_axis;
            rest /= per_axis;
        }
        sum.add(l2_standard_sq(digital_shift(ps, DyadicShift(d, m, words))));
    }
    return sum.get() / double(count);
}

} // namespace l2disc
