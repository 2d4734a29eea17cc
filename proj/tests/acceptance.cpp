// Acceptance suite: every reproduction target of the library, one pass/fail
// line per criterion, nonzero exit iff anything fails. Tolerances are fixed
// here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "l2disc/closedform.hpp"
#include "l2disc/discrepancy.hpp"
#include "l2disc/numtheory.hpp"
#include "l2disc/pointset.hpp"
#include "l2disc/verify.hpp"

using namespace l2disc;

namespace {

int failures = 0;

class Criterion {
  public:
    Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)),
          start_(std::chrono::steady_clock::now()) {}

    void require(bool ok, const std::string& detail) {
        if (!ok) {
            problems_.push_back(detail);
        }
    }

    ~Criterion() {
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                .count();
        if (problems_.empty()) {
            std::printf("PASS  criterion %2d: %s  (%.2fs)\n", number_, title_.c_str(),
                        elapsed);
        } else {
            ++failures;
            std::printf("FAIL  criterion %2d: %s  (%.2fs)\n", number_, title_.c_str(),
                        elapsed);
            for (const auto& p : problems_) std::printf("      - %s\n", p.c_str());
        }
        std::fflush(stdout);
    }

  private:
    int number_;
    std::string title_;
    std::vector<std::string> problems_;
    std::chrono::steady_clock::time_point start_;
};

bool rel_close(double a, double b, double tol) {
    const double denom = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / denom <= tol;
}

std::string fmtd(const char* pattern, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

void criterion_1_hammersley_closed_forms() {
    Criterion c(1, "Hammersley closed forms vs pair sums, m = 0..12, 1e-9 relative");
    for (int m = 0; m <= 12; ++m) {
        const PointSet h = hammersley(m);
        const double cs[3] = {hammersley_standard_sq(m), hammersley_extreme_sq(m),
                              hammersley_periodic_sq(m)};
        const double os[3] = {l2_standard_sq(h), l2_extreme_sq(h), l2_periodic_sq(h)};
        const char* kinds[3] = {"standard", "extreme", "periodic"};
        for (int i = 0; i < 3; ++i)
            c.require(rel_close(cs[i], os[i], 1e-9),
                      fmtd("m=%d %s: closed %.17g vs pair sum %.17g", m, kinds[i], cs[i],
                           os[i]));
    }
    c.require(hammersley_extreme_sq_exact(1) == Rational(1, 36), "extr^2(H_1) != 1/36");
    c.require(hammersley_periodic_sq_exact(1) == Rational(13, 72), "per^2(H_1) != 13/72");
    c.require(hammersley_standard_sq_exact(2) == Rational(887, 1152),
              "std^2(H_2) != 887/1152");
}

void criterion_2_lattice_closed_forms() {
    Criterion c(2, "lattice closed forms vs pair sums, Fibonacci q <= 1597 + 20 random");
    const auto records = verify_lattice(1597, 20, 1000, 20250808, 1e-9);
    for (const auto& r : records)
        c.require(r.pass, fmtd("%s: closed %.17g vs pair sum %.17g (rel %.3g)",
                               r.params.c_str(), r.closed_form, r.oracle, r.rel_residual));
    c.require(dedekind_sum_exact(3, 5) == Rational(0), "D(3,5) != 0 exactly");
    c.require(std::abs(lattice_trig_sum(3, 5) - 64.0 / 5.0) <= 1e-12,
              fmtd("trig sum (3,5) = %.17g, expected 12.8", lattice_trig_sum(3, 5)));
}

void criterion_3_digital_shift_mean() {
    Criterion c(3, "digital-shift mean: 1e5 64-digit shifts of H_4 vs 11/36; "
                   "m-bit mean at m = 2 vs exhaustive enumeration");
    const ShiftAverage avg = shift_average_digital(hammersley(4), 100000, 64, 271828);
    const double target = hammersley_digital_mean_sq(4); // 11/36
    c.require(std::abs(target - 11.0 / 36.0) < 1e-15, "closed form at m=4 is not 11/36");
    c.require(std::abs(avg.mean - target) <= 4.0 * avg.std_error,
              fmtd("MC mean %.8f vs 11/36 = %.8f, 4se = %.2g", avg.mean, target,
                   4.0 * avg.std_error));

    const double exhaustive = digital_mbit_mean_exhaustive(hammersley(2), 2);
    const double closed = hammersley_digital_mean_sq_mbit(2);
    c.require(std::abs(exhaustive - closed) <= 1e-12,
              fmtd("m-bit m=2: exhaustive %.17g vs closed %.17g", exhaustive, closed));
}

void criterion_4_sum_closed_forms() {
    Criterion c(4, "sum closed forms S1..S10 equal exact direct summation, m = 0..10");
    for (int m = 0; m <= 10; ++m) {
        const HammersleySums closed = hammersley_sums(m);
        const DirectHammersleySums direct = direct_hammersley_sums(m);
        const Rational* cs = &closed.s1;
        const Rational* dp = &direct.primary.s1;
        const Rational* dw = &direct.swapped.s1;
        for (int i = 0; i < 10; ++i) {
            c.require(cs[i] == dp[i],
                      fmtd("m=%d S%d: closed %s vs direct %s", m, i + 1,
                           cs[i].to_string().c_str(), dp[i].to_string().c_str()));
            c.require(dp[i] == dw[i],
                      fmtd("m=%d S%d: x-flavour %s vs y-flavour %s", m, i + 1,
                           dp[i].to_string().c_str(), dw[i].to_string().c_str()));
        }
    }
}

void criterion_5_double_sum_identity() {
    Criterion c(5, "lattice double sum vs trig side within tail bound, K = 1e4");
    for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{3, 5}, {8, 13}, {1, 2}}) {
        const BilykIdentity b = bilyk_identity(p, q, 10000);
        c.require(std::abs(b.lhs_truncated - b.rhs) <= b.tail_bound,
                  fmtd("(%lld,%lld): |%.12g - %.12g| > %.3g", (long long)p, (long long)q,
                       b.lhs_truncated, b.rhs, b.tail_bound));
    }
}

void criterion_6_geometric_shift_mean() {
    Criterion c(6, "geometric-shift mean (R = 1e5) vs periodic discrepancy");
    {
        const PointSet h = hammersley(3);
        const ShiftAverage avg = shift_average_geometric(h, 100000, 161803);
        const double target = l2_periodic_sq(h);
        c.require(std::abs(avg.mean - target) <= 4.0 * avg.std_error,
                  fmtd("hammersley(3): mean %.8f vs per^2 %.8f, 4se %.2g", avg.mean,
                       target, 4.0 * avg.std_error));
    }
    {
        const PointSet f = fibonacci_lattice(5);
        const ShiftAverage avg = shift_average_geometric(f, 100000, 141421);
        const double target = l2_periodic_sq(f);
        c.require(std::abs(avg.mean - target) <= 4.0 * avg.std_error,
                  fmtd("fibonacci(5): mean %.8f vs per^2 %.8f, 4se %.2g", avg.mean, target,
                       4.0 * avg.std_error));
    }
}

void criterion_7_inequalities() {
    Criterion c(7, "order relations on 200 random sets; 1-d identities and equality case");
    const auto ineq = verify_inequalities(200, 314159);
    for (const auto& r : ineq)
        c.require(r.pass, fmtd("%s: violation %.3g", r.params.c_str(), r.abs_residual));
    const auto one_dim = verify_one_dim(67, 271828);
    for (const auto& r : one_dim)
        c.require(r.pass, fmtd("%s: residual %.3g (rel %.3g)", r.params.c_str(),
                               r.abs_residual, r.rel_residual));
}

void criterion_8_relation() {
    Criterion c(8, "periodic/extreme relation: exact for Hammersley, 1e-12 for "
                   "lattices, broken for grids");
    for (int m = 0; m <= 12; ++m) {
        const Rational res =
            relation_residual_exact(hammersley_periodic_sq_exact(m),
                                    hammersley_extreme_sq_exact(m), std::int64_t(1) << m);
        c.require(res == Rational(0),
                  fmtd("hammersley m=%d residual %s != 0", m, res.to_string().c_str()));
    }
    for (int n = 1;; ++n) {
        const std::int64_t q = fibonacci(n);
        if (q > 1597) break;
        const LatticeClosedForm f = lattice_closed_form(fibonacci(n - 1) % q, q);
        const double res = relation_residual(f.periodic_sq, f.extreme_sq, q);
        c.require(std::abs(res) < 1e-12,
                  fmtd("fibonacci n=%d residual %.3g exceeds 1e-12", n, res));
    }
    for (int m = 2; m <= 10; ++m) {
        const Rational res = relation_residual_exact(
            grid_periodic_sq_exact(m, 2), grid_extreme_sq_exact(m, 2), std::int64_t(m) * m);
        c.require(res.abs().to_double() > 1e-3,
                  fmtd("grid m=%d residual %.3g not > 1e-3", m, res.to_double()));
    }
    const double ratio = grid_periodic_sq(1000, 2) / grid_extreme_sq(1000, 2);
    c.require(std::abs(ratio - 8.0) <= 0.08,
              fmtd("grid ratio at m=1000 is %.6f, not within 1%% of 8", ratio));
}

void criterion_9_slope_constant() {
    Criterion c(9, "normalized Fibonacci trig sum slope vs 4/(15 sqrt 5) at n = 25");
    const int n = 25;
    const std::int64_t q = fibonacci(n); // 121393
    c.require(q == 121393, fmtd("F(25) = %lld, expected 121393", (long long)q));
    const double slope =
        lattice_trig_sum(fibonacci(n - 1) % q, q) / (double(q) * double(q)) / double(n);
    const double target = fibonacci_slope_constant();
    c.require(std::abs(slope - target) <= 0.02 * target,
              fmtd("slope %.10f vs %.10f (off by %.2f%%)", slope, target,
                   100.0 * std::abs(slope - target) / target));
}

void criterion_10_cell_exact_oracle() {
    Criterion c(10, "cell-exact integration equals pair sums to 1e-10, N <= 8 sets");
    std::vector<std::pair<std::string, PointSet>> sets;
    sets.emplace_back("one-point", PointSet(2, {0.0, 0.0}));
    sets.emplace_back("hammersley(1)", hammersley(1));
    sets.emplace_back("hammersley(2)", hammersley(2));
    sets.emplace_back("hammersley(3)", hammersley(3));
    sets.emplace_back("lattice(3,5)", fibonacci_lattice(4));
    sets.emplace_back("lattice(1,4)", rational_lattice(1, 4));
    sets.emplace_back("grid(2,2)", regular_grid(2, 2));
    sets.emplace_back("random N=6", random_pointset(6, 2, 20240817));
    sets.emplace_back("random N=8", random_pointset(8, 2, 20240818));
    for (const auto& [name, ps] : sets) {
        c.require(rel_close(cell_exact_sq(ps, Kind::standard), l2_standard_sq(ps), 1e-10),
                  name + ": standard mismatch");
        c.require(rel_close(cell_exact_sq(ps, Kind::extreme), l2_extreme_sq(ps), 1e-10),
                  name + ": extreme mismatch");
        c.require(rel_close(cell_exact_sq(ps, Kind::periodic), l2_periodic_sq(ps), 1e-10),
                  name + ": periodic mismatch");
    }
}

} // namespace

int main() {
    criterion_1_hammersley_closed_forms();
    criterion_2_lattice_closed_forms();
    criterion_3_digital_shift_mean();
    criterion_4_sum_closed_forms();
    criterion_5_double_sum_identity();
    criterion_6_geometric_shift_mean();
    criterion_7_inequalities();
    criterion_8_relation();
    criterion_9_slope_constant();
    criterion_10_cell_exact_oracle();
    if (failures == 0)
        std::printf("acceptance: all 10 criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
