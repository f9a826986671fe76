#ifndef ISING_DIMER_HPP
#define ISING_DIMER_HPP

#include <array>

namespace ising {

// Ground level of the two-site chain: energy -sqrt(lambda^2 + 4) and the
// normalized amplitudes over the z-product basis |11>, |1-1>, |-11>,
// |-1-1>. The vector is (u, 2, 2, u)/sqrt(d) with u = lambda + sqrt(lambda^2+4)
// and d = 2(u^2 + 4); both middle and both outer entries coincide.
struct DimerGround {
    double energy;
    std::array<double, 4> amplitudes;
    double norm_const; // d
};

// The four energy levels {+-sqrt(lambda^2+4), +-lambda}, sorted ascending.
// Both signs of lambda are accepted (the spectrum depends on |lambda| only).
std::array<double, 4> dimer_spectrum(double lambda);

DimerGround dimer_ground(double lambda);

// Concurrence 2 |a0 a3 - a1 a2| of a normalized two-qubit state given in
// the product basis; input must be normalized to within 1e-10. Clamped to
// [0, 1] against rounding excursions.
double concurrence_of_state(const std::array<double, 4>& a);

// Ground-state concurrence C = [1 + (2/lambda)^2]^{-1/2} = |lambda| / sqrt(lambda^2 + 4),
// extended continuously to C(0) = 0.
double dimer_concurrence(double lambda);

// Entanglement entropy in nats from the concurrence: binary entropy of
// p+- = (1 +- sqrt(1 - C^2)) / 2. Range [0, ln 2].
double entropy_from_C(double C);

// Entropy fluctuation dS = C ln[(1 + sqrt(1 - C^2)) / C], with the
// removable C -> 0 limit defined as 0.
double fluctuation_from_C(double C);

// The coupling where the dimer's dS(lambda) and S(lambda) curves cross,
// approximately 2.9447; fluctuations are relatively small only beyond it.
double dimer_lambda_f();

} // namespace ising

#endif
