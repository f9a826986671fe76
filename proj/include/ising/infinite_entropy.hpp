#ifndef ISING_INFINITE_ENTROPY_HPP
#define ISING_INFINITE_ENTROPY_HPP

#include "ising/entropy_stats.hpp"
#include "ising/free_fermion.hpp"

#include <utility>

namespace ising {

// Entanglement entropy of the semi-infinite half chain as a ladder sum,
//   S = sum_j eps_j / (1 + e^{eps_j}) + sum_j ln(1 + e^{-eps_j}),
// truncated once a geometric-polynomial tail bound drops below tol.
// This series is the ground-truth oracle for the closed form below.
double entropy_series(const Coupling& c, double tol, long max_terms = 10000000);

// Closed form of the half-chain entropy in complete elliptic integrals,
// one expression per phase. Agrees with entropy_series to ~1e-12.
double entropy_closed(const Coupling& c);

// Dispersion D of the entropy operator as the ladder sum
//   D = sum_j (eps_j/2)^2 / cosh^2(eps_j/2).
double dispersion_series(const Coupling& c, double tol, long max_terms = 10000000);

// Closed form of the absolute fluctuation dS = sqrt(D):
//   lambda < 1:  (1/pi) K' sqrt((2/3) K) sqrt(k'^2 K + (k^2 - k'^2) E)
//   lambda > 1:  (2/pi) K' sqrt(K/3)     sqrt((1 - k^2/2) E - (1 - k^2) K)
// The radicands are positive for every lambda != 1; a genuinely negative
// radicand means a transcribed formula is wrong and raises logic_error.
double fluctuation_closed(const Coupling& c);

// Closed-form bundle (S, D, dS, delta, <S^2>) for one coupling.
EntropyStats stats(const Coupling& c);

// Leading critical behaviour: both S and D diverge as
// (1/12) ln(1/|1 - lambda|) (central charge 1/2). Valid for
// 0 < |1 - lambda| < 1.
double asymptote_S(double lambda);
double asymptote_D(double lambda);

// <S^2> asymptote = asymptote_S^2 + asymptote_D.
double asymptote_second_moment(double lambda);

// The disordered-side coupling where dS(lambda) = S(lambda): below it the
// half chain fluctuates more strongly than it is entangled. Located by a
// sign scan over (0.99, 1) plus Brent refinement; approximately 0.999951.
double find_lambda_f_infinite();

// Argmax and maximum of the relative fluctuation delta = dS/S on (1, 2):
// approximately (1.0044, 0.7957). Coarse log-spaced scan plus
// golden-section refinement; throws bracket_error if the scan maximum
// lands on an endpoint.
std::pair<double, double> find_lambda_m();

} // namespace ising

#endif
