#ifndef ISING_GENERALIZED_ENTROPY_HPP
#define ISING_GENERALIZED_ENTROPY_HPP

#include "ising/entropy_stats.hpp"
#include "ising/finite_chain.hpp"
#include "ising/free_fermion.hpp"

namespace ising {

// ln Tr rho^alpha for a finite Schmidt spectrum (ln sum p^alpha) or for the
// infinite-chain fermion ladder,
//   sum_j [ ln(1 + e^{-alpha eps_j}) - alpha ln(1 + e^{-eps_j}) ],
// tail-bounded truncation as elsewhere. At alpha = 1 the ladder form
// cancels termwise to exactly 0; the finite form returns ln(sum p).
double log_trace_rho_alpha(const SchmidtSpectrum& p, double alpha);
double log_trace_rho_alpha(const FermionSpectrum& s, double alpha, double tol = 1e-14,
                           long max_terms = 10000000);

// Renyi entropy ln[Tr rho^alpha] / (1 - alpha) and Tsallis entropy
// [1 - Tr rho^alpha] / (alpha - 1), for alpha > 0, alpha != 1. The exact
// alpha = 1 point is rejected; use the von Neumann operations instead.
double renyi(const SchmidtSpectrum& p, double alpha);
double renyi(const FermionSpectrum& s, double alpha, double tol = 1e-14);
double tsallis(const SchmidtSpectrum& p, double alpha);
double tsallis(const FermionSpectrum& s, double alpha, double tol = 1e-14);

// Exact interconversion between the two families at fixed alpha.
double renyi_from_tsallis(double t, double alpha);
double tsallis_from_renyi(double r, double alpha);

// Second-order moment expansion of the Tsallis entropy,
//   S - (alpha - 1)/2 * <S^2>,
// from the owning module's moment bundle. Documented validity |alpha-1| <= 0.1.
double tsallis_moment_expansion(const EntropyStats& moments, double alpha);

// <S^n> = (-1)^n d^n/dalpha^n Tr rho^alpha at alpha = 1, by five-point
// central differences with step 1e-4. n in {1, 2}.
double moment_by_alpha_derivative(const SchmidtSpectrum& p, int n);
double moment_by_alpha_derivative(const FermionSpectrum& s, int n, double tol = 1e-14);

// Conformal scaling of the density-matrix moments near criticality,
//   Tr rho^alpha ~ xi^{-A c (alpha - 1/alpha) / 12}
// (amplitude coefficient taken as 1), and the matching entanglement entropy
// A (c/6) ln xi for a subsystem with A boundary points.
double cft_trace_asymptote(double xi, double c, double alpha, int boundaries);
double cft_S(double xi, double c, int boundaries);

} // namespace ising

#endif
