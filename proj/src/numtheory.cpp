#include "l2disc/numtheory.hpp"

#include <cmath>
#include <string>

#include "l2disc/errors.hpp"
#include "l2disc/stable_sum.hpp"

namespace l2disc {

namespace {

std::int64_t checked_mul_add(std::int64_t a, std::int64_t b, std::int64_t c) {
    std::int64_t t, r;
    if (__builtin_mul_overflow(a, b, &t) || __builtin_add_overflow(t, c, &r))
        throw IntegerOverflow("convergent recurrence exceeds 64-bit range");
    return r;
}

} // namespace

ConvergentSequence convergents(const std::vector<std::int64_t>& quotients) {
    if (quotients.empty()) throw EmptyQuotients("empty partial-quotient list");
    if (quotients[0] < 0)
        throw NonPositiveQuotient("a0 must be non-negative, got " + std::to_string(quotients[0]));
    for (std::size_t k = 1; k < quotients.size(); ++k) {
        if (quotients[k] < 1)
            throw NonPositiveQuotient("a" + std::to_string(k) + " must be >= 1, got " +
                                      std::to_string(quotients[k]));
    }

    ConvergentSequence seq;
    seq.quotients = quotients;
    seq.convergents.reserve(quotients.size());
    std::int64_t p_prev2 = 0, q_prev2 = 1; // (p_-2, q_-2)
    std::int64_t p_prev1 = 1, q_prev1 = 0; // (p_-1, q_-1)
    for (std::int64_t a : quotients) {
        const std::int64_t p = checked_mul_add(a, p_prev1, p_prev2);
        const std::int64_t q = checked_mul_add(a, q_prev1, q_prev2);
        seq.convergents.emplace_back(p, q);
        p_prev2 = p_prev1;
        q_prev2 = q_prev1;
        p_prev1 = p;
        q_prev1 = q;
    }
    return seq;
}

std::int64_t fibonacci(int n) {
    if (n < 0) throw BadParams("fibonacci index must be non-negative");
    std::int64_t a = 1, b = 1; // F0, F1
    for (int i = 2; i <= n; ++i) {
        std::int64_t c;
        if (__builtin_add_overflow(a, b, &c))
            throw IntegerOverflow("fibonacci(" + std::to_string(n) + ") exceeds 64-bit range");
        a = b;
        b = c;
    }
    return n == 0 ? a : b;
}

double rho(double x) { return 0.5 - (x - std::floor(x)); }

Rational dedekind_sum_exact(std::int64_t p, std::int64_t q) {
    if (q < 1) throw NonPositiveModulus("dedekind sum needs q >= 1, got " + std::to_string(q));
    if (q > 1000000)
        throw IntegerOverflow("exact dedekind sum limited to q <= 10^6");
    const std::int64_t pm = ((p % q) + q) % q;
    // rho(k/q) rho(kp/q) = (q - 2k)(q - 2r) / (4q^2) with r = kp mod q.
    __int128 numerator = 0;
    for (std::int64_t k = 1; k < q; ++k) {
        const std::int64_t r = (k * pm) % q;
        numerator += (__int128)(q - 2 * k) * (q - 2 * r);
    }
    return Rational(numerator, intops::mul((__int128)4, intops::mul(q, q)));
}

double dedekind_sum(std::int64_t p, std::int64_t q) {
    if (q < 1) throw NonPositiveModulus("dedekind sum needs q >= 1, got " + std::to_string(q));
    if (q <= 1000000) return dedekind_sum_exact(p, q).to_double();
    const std::int64_t pm = ((p % q) + q) % q;
    StableSum s;
    for (std::int64_t k = 1; k < q; ++k) {
        const std::int64_t r = (__int128)k * pm % q;
        s.add((q - 2.0 * k) * (q - 2.0 * r));
    }
    return s.get() / (4.0 * q * q);
}

double bernoulli2(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw OutOfRange("bernoulli2 argument must lie in [0,1]");
    return x * x - x + 1.0 / 6.0;
}

} // namespace l2disc
