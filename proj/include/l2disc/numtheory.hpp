#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "l2disc/rational.hpp"

namespace l2disc {

// Partial quotients a0..an together with the convergents p_k/q_k produced by
// the three-term recurrence with seeds (p_-1,q_-1) = (1,0), (p_-2,q_-2) = (0,1).
// Consequences: gcd(p_k,q_k) = 1 and p_k*q_{k-1} - p_{k-1}*q_k = (-1)^(k-1).
struct ConvergentSequence {
    std::vector<std::int64_t> quotients;
    std::vector<std::pair<std::int64_t, std::int64_t>> convergents; // (p_k, q_k)
};

// a0 may be zero; every later quotient must be >= 1. Overflow of the
// recurrence throws IntegerOverflow rather than wrapping.
ConvergentSequence convergents(const std::vector<std::int64_t>& quotients);

// F(0) = F(1) = 1, F(n) = F(n-1) + F(n-2).
std::int64_t fibonacci(int n);

// rho(x) = 1/2 - {x}
double rho(double x);

// Inhomogeneous Dedekind sum  sum_{k=1}^{q-1} rho(k/q) rho(k p / q).
// Exact for q <= 10^6 (every term has denominator dividing 4q^2);
// compensated floating point above that.
Rational dedekind_sum_exact(std::int64_t p, std::int64_t q);
double dedekind_sum(std::int64_t p, std::int64_t q);

// Second Bernoulli polynomial B2(x) = x^2 - x + 1/6 on [0,1].
double bernoulli2(double x);

} // namespace l2disc
