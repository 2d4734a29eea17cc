#include "l2disc/rational.hpp"

#include <algorithm>

namespace l2disc {

Rational::Rational(Int n, Int d) : num_(n), den_(d) {
    if (d == 0) throw BadParams("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    const Int g = intops::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
}

Rational Rational::pow2(int k) {
    if (k < -126 || k > 126) throw IntegerOverflow("pow2 exponent out of range");
    Rational r;
    if (k >= 0) {
        r.num_ = Int(1) << k;
        r.den_ = 1;
    } else {
        r.num_ = 1;
        r.den_ = Int(1) << (-k);
    }
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    // Reduce by gcd of denominators first; keeps intermediates small.
    const Int g = intops::gcd(den_, o.den_);
    const Int da = den_ / g;
    const Int db = o.den_ / g;
    const Int n = intops::add(intops::mul(num_, db), intops::mul(o.num_, da));
    const Int d = intops::mul(den_, db);
    return Rational(n, d);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    const Int g1 = intops::gcd(num_, o.den_);
    const Int g2 = intops::gcd(o.num_, den_);
    const Int n = intops::mul(num_ / g1, o.num_ / g2);
    const Int d = intops::mul(den_ / g2, o.den_ / g1);
    return Rational(n, d);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw BadParams("rational division by zero");
    Rational inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (inv.den_ < 0) {
        inv.num_ = -inv.num_;
        inv.den_ = -inv.den_;
    }
    return *this * inv;
}

bool Rational::operator<(const Rational& o) const {
    return intops::sub(intops::mul(num_, o.den_), intops::mul(o.num_, den_)) < 0;
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
    std::string s = intops::to_string(num_);
    if (den_ != 1) {
        s += '/';
        s += intops::to_string(den_);
    }
    return s;
}

namespace intops {

std::string to_string(__int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string s;
    while (u > 0) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

} // namespace intops

} // namespace l2disc
