#ifndef ISING_ELLIPTIC_HPP
#define ISING_ELLIPTIC_HPP

namespace ising {

// Elliptic modulus k together with the complementary modulus
// k' = sqrt(1 - k^2). Valid range is 0 <= k < 1; k = 1 is rejected because
// K(k) diverges there.
struct Modulus {
    double k;
    double k_prime;

    explicit Modulus(double k);
};

// The four complete integrals attached to one modulus:
//   K = K(k), K' = K(k'), E = E(k), E' = E(k').
// They satisfy the Legendre relation E*K' + E'*K - K*K' = pi/2, which the
// test suite uses as a precision canary.
struct EllipticPair {
    double K;
    double K_prime;
    double E;
    double E_prime;
};

// Complete elliptic integral of the first kind,
//   K(k) = \int_0^{pi/2} dtheta / sqrt(1 - k^2 sin^2 theta),
// evaluated by the arithmetic-geometric mean iteration. Accepts
// 0 <= k <= 1 - 1e-15; larger k (still < 1) raises std::range_error so that
// critical-point scans see an explicit signal instead of a huge value.
double ellint_K(double k);

// Complete elliptic integral of the second kind,
//   E(k) = \int_0^{pi/2} sqrt(1 - k^2 sin^2 theta) dtheta,
// for 0 <= k <= 1 (E(1) = 1 exactly). AGM-family evaluation.
double ellint_E(double k);

// Jacobi nome q = exp(-pi K(k') / K(k)) for 0 < k < 1. Strictly increasing
// in k; the endpoint limits 0 and 1 are not representable as interior
// values and raise std::domain_error.
double nome(double k);

// dK/dk = (E(k)/k'^2 - K(k)) / k on (0, 1).
double dK_dk(double k);

// dq/dk = pi^2 q / (2 k k'^2 K(k)^2) on (0, 1).
double dq_dk(double k);

// All four complete integrals for one modulus. The complementary integrals
// are computed from the stored k' directly (AGM with b0 = k), so no
// precision is lost near the ends of the range.
EllipticPair elliptic_pair(const Modulus& m);

} // namespace ising

#endif
