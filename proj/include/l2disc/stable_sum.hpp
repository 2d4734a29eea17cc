#pragma once

#include <cmath>
#include <cstddef>

namespace l2disc {

// Neumaier-compensated accumulator. The correction term also absorbs the
// case |input| > |sum|, which plain Kahan summation loses.
class StableSum {
  public:
    StableSum() = default;
    explicit StableSum(double init) : sum_(init) {}

    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double get() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Uncompensated counterpart, same interface. Kept for the `naive`
// summation mode so the two paths differ only in the accumulator.
class PlainSum {
  public:
    PlainSum() = default;
    explicit PlainSum(double init) : sum_(init) {}

    void add(double x) { sum_ += x; }
    double get() const { return sum_; }

  private:
    double sum_ = 0.0;
};

} // namespace l2disc
