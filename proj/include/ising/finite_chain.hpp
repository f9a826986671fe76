#ifndef ISING_FINITE_CHAIN_HPP
#define ISING_FINITE_CHAIN_HPP

#include "ising/entropy_stats.hpp"

#include <span>
#include <vector>

namespace ising {

// An open chain of L sites (2 <= L <= 14) with coupling lambda > 0 and a
// bipartition cut: sites 1..cut form the kept subsystem. Basis states are
// integers whose bit i-1 is the z spin of site i (0 = up).
struct ChainSpec {
    int L;
    double lambda;
    int cut;

    // cut < 0 selects the default L/2 (rounded down).
    ChainSpec(int L, double lambda, int cut = -1);
};

// Matrix-free action of H = -sum_i sigma^x_i - lambda sum_i sigma^z_i sigma^z_{i+1}
// on a 2^L vector: a precomputed diagonal (bond-alignment counts) plus one
// amplitude pull per single-spin flip.
class HamiltonianOp {
public:
    explicit HamiltonianOp(const ChainSpec& spec);

    int dim() const { return dim_; }
    int sites() const { return L_; }
    void apply(std::span<const double> in, std::span<double> out) const;

private:
    int L_;
    int dim_;
    std::vector<double> diagonal_;
};

HamiltonianOp build_hamiltonian(const ChainSpec& spec);

// Row-major dense realization, for the small-L oracle path.
std::vector<double> dense_hamiltonian(const ChainSpec& spec);

struct GroundState {
    double energy;
    std::vector<double> amplitudes; // z-product basis, all positive after sign fixing
    int L;
};

// Lowest eigenpair by Lanczos with full reorthogonalization, started from
// the deterministic all-ones vector (which overlaps the Perron-positive
// ground state for every lambda > 0). Residual ||H psi - E psi|| below
// residual_tol on return; convergence_error after max_iter applications.
GroundState ground_state(const ChainSpec& spec, double residual_tol = 1e-10,
                         int max_iter = 10000);

// Eigenvalues of the reduced density matrix across a cut, descending;
// entries below 1e-16 are dropped.
struct SchmidtSpectrum {
    std::vector<double> probs;
};

SchmidtSpectrum schmidt_spectrum(std::span<const double> amplitudes, int sites, int cut);
SchmidtSpectrum schmidt_spectrum(const GroundState& g, int cut);

// Entropy-operator moments of a normalized Schmidt spectrum:
// S = -sum p ln p, D = sum p ln^2 p - S^2, etc.
EntropyStats entropy_stats_from_spectrum(const SchmidtSpectrum& p);

// Argmax of dS(lambda) for the half-cut chain over [lo, hi]: 200-point scan
// refined by golden section to 1e-4. Throws bracket_error when the scan
// maximum sits on a range endpoint.
double max_fluctuation_position(int L, double lo = 0.2, double hi = 3.0);

} // namespace ising

#endif
