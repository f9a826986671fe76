#include "ising/elliptic.hpp"

#include "oracles.hpp"

#include "doctest.h"

#include <cmath>
#include <stdexcept>

using namespace ising;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

TEST_SUITE_BEGIN("elliptic");

TEST_CASE("K at landmark moduli")
{
    CHECK(ellint_K(0.0) == doctest::Approx(kPi / 2).epsilon(1e-15));
    // frozen from quadrature of the defining integral
    CHECK(ellint_K(kInvSqrt2) == doctest::Approx(1.8540746773013719).epsilon(1e-13));
    CHECK(ellint_K(0.8) == doctest::Approx(1.9953027776647294).epsilon(1e-13));
}

TEST_CASE("E at landmark moduli")
{
    CHECK(ellint_E(0.0) == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(ellint_E(1.0) == 1.0);
    CHECK(ellint_E(0.5) == doctest::Approx(1.4674622093394272).epsilon(1e-13));
}

TEST_CASE("AGM agrees with adaptive quadrature across the modulus range")
{
    for (int i = 1; i <= 99; ++i) {
        const double k = 0.01 * i;
        const double Kq = oracles::quad_ellint_K(k);
        const double Eq = oracles::quad_ellint_E(k);
        CHECK(std::abs(ellint_K(k) - Kq) <= 1e-12 * Kq);
        CHECK(std::abs(ellint_E(k) - Eq) <= 1e-12 * Eq);
    }
}

TEST_CASE("domain and range guards")
{
    CHECK_THROWS_AS(ellint_K(-0.1), std::domain_error);
    CHECK_THROWS_AS(ellint_K(1.0), std::domain_error);
    CHECK_THROWS_AS(ellint_K(1.5), std::domain_error);
    CHECK_THROWS_AS(ellint_K(std::nan("")), std::domain_error);
    CHECK_NOTHROW(ellint_K(1.0 - 1e-15)); // last accepted modulus
    CHECK_THROWS_AS(ellint_K(1.0 - 1e-16), std::range_error);
    CHECK_THROWS_AS(ellint_E(-0.1), std::domain_error);
    CHECK_THROWS_AS(ellint_E(1.1), std::domain_error);
    CHECK_THROWS_AS(ellint_E(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(nome(0.0), std::domain_error);
    CHECK_THROWS_AS(nome(1.0), std::domain_error);
    CHECK_THROWS_AS(dK_dk(0.0), std::domain_error);
    CHECK_THROWS_AS(dq_dk(1.0), std::domain_error);
    CHECK_THROWS_AS(Modulus(1.0), std::domain_error);
    CHECK_THROWS_AS(Modulus(-0.2), std::domain_error);
}

TEST_CASE("nome values and monotonicity")
{
    // self-dual modulus: K(k') = K(k) forces q = e^{-pi}
    CHECK(nome(kInvSqrt2) == doctest::Approx(std::exp(-kPi)).epsilon(1e-14));

    // against composed quadrature oracles
    const double kp = std::sqrt(1.0 - 0.09);
    const double q_oracle = std::exp(-kPi * oracles::quad_ellint_K(kp) / oracles::quad_ellint_K(0.3));
    CHECK(nome(0.3) == doctest::Approx(q_oracle).epsilon(1e-12));

    double prev = 0.0;
    for (int i = 1; i <= 99; ++i) {
        const double q = nome(0.01 * i);
        CHECK(q > prev);
        prev = q;
    }
    CHECK(nome(1e-3) < 1e-6);   // q -> 0 with k
    CHECK(nome(1e-4) < nome(1e-3));
}

TEST_CASE("nome complement relation ln q(k) ln q(k') = pi^2")
{
    for (int i = 1; i <= 19; ++i) {
        const double k = 0.05 * i;
        const Modulus m(k);
        const double prod = std::log(nome(k)) * std::log(nome(m.k_prime));
        CHECK(prod == doctest::Approx(kPi * kPi).epsilon(1e-10));
    }
}

TEST_CASE("derivatives match central finite differences")
{
    const double h = 1e-6;
    CHECK(std::abs(dK_dk(0.5) - oracles::central_difference([](double x) { return ellint_K(x); }, 0.5, h))
          < 1e-7);
    CHECK(std::abs(dq_dk(0.5) - oracles::central_difference([](double x) { return nome(x); }, 0.5, h))
          < 1e-7);
    for (int i = 1; i <= 9; ++i) {
        const double k = 0.1 * i;
        CHECK(std::abs(dK_dk(k) - oracles::central_difference([](double x) { return ellint_K(x); }, k, h))
              < 1e-6);
        CHECK(std::abs(dq_dk(k) - oracles::central_difference([](double x) { return nome(x); }, k, h))
              < 1e-6);
    }
}

TEST_CASE("dK/dk vanishes like (pi/4) k at small modulus")
{
    const double k = 1e-4;
    CHECK(dK_dk(k) / (kPi / 4.0 * k) == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("modulus bookkeeping and pair ordering")
{
    for (int i = 1; i <= 99; ++i) {
        const Modulus m(0.01 * i);
        CHECK(std::abs(m.k * m.k + m.k_prime * m.k_prime - 1.0) <= 1e-15);
        const EllipticPair p = elliptic_pair(m);
        CHECK(p.E <= kPi / 2);
        CHECK(kPi / 2 <= p.K);
        CHECK(p.E <= p.K);
        CHECK(p.E_prime <= p.K_prime);
    }
    // degenerate modulus: K' diverges, E' pins to 1
    const EllipticPair zero = elliptic_pair(Modulus(0.0));
    CHECK(zero.K == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(zero.E == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(zero.E_prime == 1.0);
    CHECK(std::isinf(zero.K_prime));
}

TEST_CASE("Legendre relation as a precision canary")
{
    for (int i = 1; i <= 99; ++i) {
        const EllipticPair p = elliptic_pair(Modulus(0.01 * i));
        const double defect = std::abs(p.E * p.K_prime + p.E_prime * p.K - p.K * p.K_prime - kPi / 2);
        CHECK(defect < 1e-12);
    }
}

TEST_SUITE_END();
