#include "doctest.h"

#include <numeric>
#include <random>

#include "l2disc/errors.hpp"
#include "l2disc/numtheory.hpp"

using namespace l2disc;

TEST_CASE("convergents of the all-ones continued fraction") {
    const auto seq = convergents({1, 1, 1, 1, 1});
    // hand recurrence: p = 1,2,3,5,8; q = 1,1,2,3,5
    const std::vector<std::pair<std::int64_t, std::int64_t>> expected{
        {1, 1}, {2, 1}, {3, 2}, {5, 3}, {8, 5}};
    CHECK(seq.convergents == expected);
}

TEST_CASE("convergents of a sqrt(2)-like expansion") {
    // hand recurrence for [1;2,2,2]: 1/1, 3/2, 7/5, 17/12
    const auto seq = convergents({1, 2, 2, 2});
    const std::vector<std::pair<std::int64_t, std::int64_t>> expected{
        {1, 1}, {3, 2}, {7, 5}, {17, 12}};
    CHECK(seq.convergents == expected);
}

TEST_CASE("convergents of [0]") {
    const auto seq = convergents({0});
    CHECK(seq.convergents == std::vector<std::pair<std::int64_t, std::int64_t>>{{0, 1}});
}

TEST_CASE("convergent invariants on random quotient lists") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::int64_t> a{std::int64_t(rng() % 5)};
        const int len = 2 + int(rng() % 12);
        for (int i = 1; i < len; ++i) a.push_back(1 + std::int64_t(rng() % 9));
        const auto seq = convergents(a);
        std::int64_t pp = 1, qp = 0; // (p_-1, q_-1)
        int sign = -1;               // (-1)^(k-1) at k = 0
        for (const auto& [p, q] : seq.convergents) {
            CHECK(std::gcd(p, q) == 1);
            CHECK(p * qp - pp * q == sign);
            sign = -sign;
            pp = p;
            qp = q;
        }
        for (std::size_t k = 1; k + 1 < seq.convergents.size(); ++k)
            CHECK(seq.convergents[k].second < seq.convergents[k + 1].second);
    }
}

TEST_CASE("all-ones quotients land on consecutive Fibonacci numbers") {
    for (int n = 1; n <= 20; ++n) {
        const std::vector<std::int64_t> ones(n + 1, 1);
        const auto [p, q] = convergents(ones).convergents.back();
        CHECK(q == fibonacci(n));
        CHECK(p == fibonacci(n + 1));
    }
    // with a leading zero quotient the pair instead reads (F(n-1), F(n))
    for (int n = 1; n <= 20; ++n) {
        std::vector<std::int64_t> zero_led(n + 1, 1);
        zero_led[0] = 0;
        const auto [p, q] = convergents(zero_led).convergents.back();
        CHECK(q == fibonacci(n));
        CHECK(p == fibonacci(n - 1));
    }
}

TEST_CASE("convergents input validation") {
    CHECK_THROWS_AS(convergents({}), EmptyQuotients);
    CHECK_THROWS_AS(convergents({1, 0, 2}), NonPositiveQuotient);
    CHECK_THROWS_AS(convergents({-1}), NonPositiveQuotient);
    CHECK_THROWS_AS(convergents(std::vector<std::int64_t>(200, 1000000000)), IntegerOverflow);
}

TEST_CASE("fibonacci") {
    CHECK(fibonacci(0) == 1);
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(6) == 13); // 1,1,2,3,5,8,13
    for (int n = 2; n <= 40; ++n) CHECK(fibonacci(n) == fibonacci(n - 1) + fibonacci(n - 2));
    CHECK_THROWS_AS(fibonacci(92), IntegerOverflow);
    CHECK_THROWS_AS(fibonacci(-1), BadParams);
}

TEST_CASE("rho") {
    CHECK(rho(0.5) == 0.0);
    CHECK(rho(0.2) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(rho(2.4) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(rho(-0.25) == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(rho(3.0) == 0.5);
}

TEST_CASE("dedekind sums") {
    CHECK(dedekind_sum_exact(1, 2) == Rational(0));
    CHECK(dedekind_sum_exact(3, 5) == Rational(0));
    CHECK(dedekind_sum_exact(1, 3) == Rational(1, 18));
    CHECK(dedekind_sum_exact(1, 1) == Rational(0)); // empty sum
    CHECK(dedekind_sum(1, 3) == doctest::Approx(1.0 / 18.0).epsilon(1e-15));
    CHECK_THROWS_AS(dedekind_sum(1, 0), NonPositiveModulus);
    CHECK_THROWS_AS(dedekind_sum_exact(1, -5), NonPositiveModulus);
}

TEST_CASE("dedekind antisymmetry under p -> q-p for coprime pairs") {
    for (std::int64_t q = 2; q <= 50; ++q)
        for (std::int64_t p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            CHECK(dedekind_sum_exact(q - p, q) == -dedekind_sum_exact(p, q));
        }
}

TEST_CASE("dedekind sum accepts p reduced mod q") {
    CHECK(dedekind_sum_exact(8, 5) == dedekind_sum_exact(3, 5));
    CHECK(dedekind_sum_exact(-2, 5) == dedekind_sum_exact(3, 5));
}

TEST_CASE("dedekind floating fallback above 10^6") {
    // D(1,q) = sum rho(k/q)^2 = (q-1)(q-2)/(12q)
    const std::int64_t q = 1000003;
    const double expected = double(q - 1) * double(q - 2) / (12.0 * double(q));
    CHECK(dedekind_sum(1, q) == doctest::Approx(expected).epsilon(1e-12));
    CHECK_THROWS_AS(dedekind_sum_exact(1, q), IntegerOverflow);
}

TEST_CASE("bernoulli2") {
    CHECK(bernoulli2(0.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-16));
    CHECK(bernoulli2(0.5) == doctest::Approx(-1.0 / 12.0).epsilon(1e-16));
    CHECK(bernoulli2(1.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-16));
    for (int i = 0; i <= 64; ++i) {
        const double x = double(i) / 64.0;
        CHECK(bernoulli2(x) == bernoulli2(1.0 - x));
    }
    CHECK_THROWS_AS(bernoulli2(-0.001), OutOfRange);
    CHECK_THROWS_AS(bernoulli2(1.001), OutOfRange);
}
