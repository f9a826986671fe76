#include "ising/elliptic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ising {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 1.57079632679489661923;

// Arithmetic-geometric mean of (a, b), terminating when |a - b| < 1e-16 a.
// Quadratic convergence; a handful of iterations suffice at double
// precision. b = 0 is the degenerate limit agm = 0 (K diverges).
double agm(double a, double b)
{
    if (b <= 0.0)
        return 0.0;
    for (int i = 0; i < 64 && std::abs(a - b) >= 1e-16 * a; ++i) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return 0.5 * (a + b);
}

double complement(double k)
{
    return std::sqrt((1.0 - k) * (1.0 + k));
}

void require_unit_interval(double k, const char* who, bool closed_right)
{
    const bool ok = closed_right ? (k >= 0.0 && k <= 1.0) : (k >= 0.0 && k < 1.0);
    if (!std::isfinite(k) || !ok)
        throw std::domain_error(std::string(who) + ": modulus " + std::to_string(k)
                                + " outside the valid range");
}

// K(k) given the complementary modulus, bypassing the public range guard.
double K_from_complement(double kp)
{
    return kHalfPi / agm(1.0, kp);
}

// E(k) by the AGM with the descending sequence c_n:
//   E = K * (1 - sum_{n>=0} 2^{n-1} c_n^2),  c_0 = k, c_{n+1} = (a_n - b_n)/2.
// The degenerate endpoint (complement 0, where the product form becomes
// inf * 0) is pinned to its exact value.
double E_from_modulus(double k)
{
    if (k == 1.0)
        return 1.0;
    double a = 1.0;
    double b = complement(k);
    double sum = 0.5 * k * k;
    double pow2 = 0.5;
    for (int i = 0; i < 64 && std::abs(a - b) >= 1e-16 * a; ++i) {
        const double c = 0.5 * (a - b);
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
        pow2 *= 2.0;
        sum += pow2 * c * c;
    }
    return kHalfPi / (0.5 * (a + b)) * (1.0 - sum);
}

} // namespace

Modulus::Modulus(double k_in) : k(k_in), k_prime(0.0)
{
    require_unit_interval(k_in, "Modulus", /*closed_right=*/false);
    k_prime = complement(k_in);
}

double ellint_K(double k)
{
    require_unit_interval(k, "ellint_K", /*closed_right=*/false);
    if (k > 1.0 - 1e-15)
        throw std::range_error("ellint_K: k = " + std::to_string(k)
                               + " exceeds 1 - 1e-15; K(k) is out of numerical range");
    return K_from_complement(complement(k));
}

double ellint_E(double k)
{
    require_unit_interval(k, "ellint_E", /*closed_right=*/true);
    if (k == 1.0)
        return 1.0;
    return E_from_modulus(k);
}

double nome(double k)
{
    if (!std::isfinite(k) || k <= 0.0 || k >= 1.0)
        throw std::domain_error("nome: modulus must lie strictly inside (0, 1)");
    // q = exp(-pi K(k')/K(k)); the ratio reduces to agm(1, k') / agm(1, k).
    return std::exp(-kPi * agm(1.0, complement(k)) / agm(1.0, k));
}

double dK_dk(double k)
{
    if (!std::isfinite(k) || k <= 0.0 || k >= 1.0)
        throw std::domain_error("dK_dk: modulus must lie strictly inside (0, 1)");
    const double kp2 = (1.0 - k) * (1.0 + k);
    return (E_from_modulus(k) / kp2 - K_from_complement(std::sqrt(kp2))) / k;
}

double dq_dk(double k)
{
    if (!std::isfinite(k) || k <= 0.0 || k >= 1.0)
        throw std::domain_error("dq_dk: modulus must lie strictly inside (0, 1)");
    const double kp2 = (1.0 - k) * (1.0 + k);
    const double K = K_from_complement(std::sqrt(kp2));
    return kPi * kPi * nome(k) / (2.0 * k * kp2 * K * K);
}

EllipticPair elliptic_pair(const Modulus& m)
{
    EllipticPair p;
    p.K = K_from_complement(m.k_prime);
    p.K_prime = K_from_complement(m.k);
    p.E = E_from_modulus(m.k);
    p.E_prime = E_from_modulus(m.k_prime);
    return p;
}

} // namespace ising
