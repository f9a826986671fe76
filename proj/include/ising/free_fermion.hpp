#ifndef ISING_FREE_FERMION_HPP
#define ISING_FREE_FERMION_HPP

#include "ising/elliptic.hpp"

namespace ising {

enum class Phase { Disordered, Ordered, Critical };

// Spin-spin interaction strength lambda (transverse field fixed at h = 1)
// together with the derived elliptic modulus k = min{lambda, 1/lambda} and
// the phase tag. k lies in (0, 1) except at the critical point, where it
// equals 1 and no spectrum-dependent quantity is defined.
class Coupling {
public:
    explicit Coupling(double lambda);

    double lambda() const { return lambda_; }
    double k() const { return k_; }
    Phase phase() const { return phase_; }

    // Modulus object for elliptic evaluation; throws critical_point_error
    // at lambda = 1.
    Modulus modulus() const;

private:
    double lambda_;
    double k_;
    Phase phase_;
};

// Which ladder the excitation energies live on: odd multiples of epsilon in
// the disordered phase (lambda < 1), even multiples in the ordered phase.
enum class Branch { Odd, Even };

// Level spacing epsilon plus the branch rule; generates the equidistant
// single-particle spectrum eps_j of the entanglement Hamiltonian.
struct FermionSpectrum {
    double epsilon;
    Branch branch;
};

// epsilon = pi K(k') / K(k). Strictly positive away from lambda = 1 and
// exactly symmetric under lambda <-> 1/lambda (both map to the same k).
double level_spacing(const Coupling& c);

// Spectrum bundle for a coupling: level_spacing plus the phase's branch.
FermionSpectrum spectrum_for(const Coupling& c);

// eps_j = (2j+1) epsilon on the Odd branch, 2j epsilon on the Even branch.
double excitation(long j, const FermionSpectrum& s);

// ln Z = sum_j ln(1 + exp(-eps_j)), truncated once the geometric tail bound
// exp(-eps_j) / (1 - exp(-2 eps)) drops below tol. The Even branch keeps
// its j = 0 term (worth ln 2). Throws convergence_error if more than
// max_terms would be needed.
double log_partition(const FermionSpectrum& s, double tol, long max_terms = 10000000);

} // namespace ising

#endif
