#pragma once

#include <cstdint>
#include <string>

#include "l2disc/errors.hpp"

namespace l2disc {

// Exact rational arithmetic on 128-bit integers. The closed forms this
// library evaluates have denominators like 9*2^(3m+5), so 128 bits cover
// every parameter range the evaluators accept. Overflow throws
// IntegerOverflow instead of wrapping.
class Rational {
  public:
    using Int = __int128;

    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Int n, Int d);

    // 2^k for |k| <= 126.
    static Rational pow2(int k);

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }

    bool is_zero() const { return num_ == 0; }
    Rational abs() const { return num_ < 0 ? -*this : *this; }

    Int num() const { return num_; }
    Int den() const { return den_; }

    double to_double() const;
    std::string to_string() const; // "num/den", or just "num" when den == 1

  private:
    void normalize();

    Int num_;
    Int den_; // always > 0
};

namespace intops {

// Checked 128-bit helpers shared with the integer accumulators in the
// direct-summation oracles.
inline __int128 add(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw IntegerOverflow("128-bit addition overflow");
    return r;
}

inline __int128 sub(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw IntegerOverflow("128-bit subtraction overflow");
    return r;
}

inline __int128 mul(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw IntegerOverflow("128-bit multiplication overflow");
    return r;
}

inline __int128 gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// a^e with overflow checking; e >= 0.
inline __int128 pow(__int128 a, int e) {
    __int128 r = 1;
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

std::string to_string(__int128 v);

} // namespace intops

} // namespace l2disc
