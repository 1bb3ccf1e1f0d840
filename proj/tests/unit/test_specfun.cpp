#include "cylqd/errors.hpp"
#include "cylqd/specfun.hpp"

#include <doctest.h>

#include <cmath>

using namespace cylqd;
using namespace cylqd::specfun;

TEST_CASE("values at the origin")
{
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(1, 0.0) == 0.0);
    CHECK(bessel_j(7, 0.0) == 0.0);
}

TEST_CASE("first zero of J0 and extremum of J1")
{
    // zeros located by the multi-precision oracle
    CHECK(std::abs(bessel_j(0, 2.404825557695773)) <= 1e-12);
    CHECK(std::abs(bessel_j_prime(1, 1.8411837813406593)) <= 1e-10);
}

TEST_CASE("K values against the reference")
{
    CHECK(bessel_k(0, 1.0) == doctest::Approx(0.42102443824070834).epsilon(1e-15));
    CHECK(bessel_k(1, 1.0) == doctest::Approx(0.60190723019723458).epsilon(1e-15));
    CHECK(bessel_k_scaled(0, 1.0) == doctest::Approx(std::exp(1.0) * 0.42102443824070834).epsilon(1e-14));
}

TEST_CASE("derivative identities")
{
    CHECK(bessel_j_prime(0, 1.5) == -bessel_j(1, 1.5));
    CHECK(bessel_k_prime(0, 2.0) == -bessel_k(1, 2.0));
    const double x = 3.7;
    CHECK(bessel_j_prime(3, x) == doctest::Approx(bessel_j(2, x) - 3.0 / x * bessel_j(3, x)).epsilon(1e-13));
    CHECK(bessel_k_prime(3, x) == doctest::Approx(-bessel_k(2, x) - 3.0 / x * bessel_k(3, x)).epsilon(1e-13));
}

TEST_CASE("domain violations")
{
    CHECK_THROWS_AS(bessel_j(-1, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_j(61, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_j(0, -1.0), DomainError);
    CHECK_THROWS_AS(bessel_j(0, 2e4), DomainError);
    CHECK_THROWS_AS(bessel_k(0, 0.0), DomainError);
    CHECK_THROWS_AS(bessel_j_prime(1, 0.0), DomainError);
    CHECK_THROWS_AS(bessel_k(0, 800.0), UnderflowError);
    CHECK(bessel_k_scaled(0, 800.0) > 0.0);
}

TEST_CASE("three-term recurrences")
{
    double worst_j = 0.0;
    double worst_k = 0.0;
    for (int n = 1; n < 40; ++n) {
        for (double x = 0.05; x < 300.0; x *= 1.37) {
            const double jr = std::abs(bessel_j(n - 1, x) + bessel_j(n + 1, x) - 2.0 * n / x * bessel_j(n, x));
            worst_j = std::max(worst_j, jr / std::max(1.0, std::abs(bessel_j(n, x))));
            const double kn = bessel_k_scaled(n, x);
            const double kr = std::abs(bessel_k_scaled(n + 1, x) - bessel_k_scaled(n - 1, x) - 2.0 * n / x * kn);
            worst_k = std::max(worst_k, kr / std::max(1.0, kn));
        }
    }
    CHECK(worst_j <= 1e-10);
    CHECK(worst_k <= 1e-10);
}

TEST_CASE("sum rule J0^2 + 2 sum Jn^2 = 1")
{
    for (double x : {0.3, 2.0, 7.5, 19.0, 25.0}) {
        double s = bessel_j(0, x) * bessel_j(0, x);
        for (int n = 1; n <= 60; ++n) s += 2.0 * bessel_j(n, x) * bessel_j(n, x);
        CHECK(std::abs(s - 1.0) <= 1e-10);
    }
}

TEST_CASE("K is positive and decreasing")
{
    for (int n : {0, 1, 5, 20}) {
        double prev = bessel_k(n, 0.01);
        for (double x = 0.02; x < 300.0; x *= 1.2) {
            const double k = bessel_k(n, x);
            CHECK(k > 0.0);
            CHECK(k < prev);
            prev = k;
        }
    }
}

TEST_CASE("scaled K approaches sqrt(pi/2x) from above")
{
    double prev = 0.0;
    for (double x : {10.0, 100.0, 1000.0, 9000.0}) {
        const double ratio = bessel_k_scaled(0, x) / std::sqrt(M_PI / (2.0 * x));
        CHECK(ratio < 1.0);
        CHECK(ratio > prev);
        prev = ratio;
    }
    for (double x : {1.0, 10.0, 50.0, 100.0}) {
        CHECK(bessel_k_scaled(3, x) / bessel_k(3, x) == doctest::Approx(std::exp(x)).epsilon(1e-12));
    }
}

TEST_CASE("pair helpers agree with single evaluations")
{
    const JPair p = bessel_j_pair(4, 6.3);
    CHECK(p.value == doctest::Approx(bessel_j(4, 6.3)).epsilon(1e-15));
    CHECK(p.prev == doctest::Approx(bessel_j(3, 6.3)).epsilon(1e-15));
    CHECK(p.prime == doctest::Approx(bessel_j_prime(4, 6.3)).epsilon(1e-14));
    const KPair k = bessel_k_scaled_pair(2, 4.0);
    CHECK(k.value == doctest::Approx(bessel_k_scaled(2, 4.0)).epsilon(1e-15));
    CHECK(k.prime == doctest::Approx(bessel_k_prime_scaled(2, 4.0)).epsilon(1e-14));
}
