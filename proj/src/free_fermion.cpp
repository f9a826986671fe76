#include "ising/free_fermion.hpp"

#include "ising/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ising {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Coupling::Coupling(double lambda) : lambda_(lambda), k_(0.0), phase_(Phase::Critical)
{
    if (!std::isfinite(lambda) || lambda <= 0.0)
        throw std::domain_error("Coupling: lambda must be finite and positive");
    if (lambda < 1.0) {
        k_ = lambda;
        phase_ = Phase::Disordered;
    } else if (lambda > 1.0) {
        k_ = 1.0 / lambda;
        phase_ = Phase::Ordered;
    } else {
        k_ = 1.0;
        phase_ = Phase::Critical;
    }
}

Modulus Coupling::modulus() const
{
    if (phase_ == Phase::Critical)
        throw critical_point_error("Coupling: no elliptic modulus at lambda = 1");
    return Modulus(k_);
}

double level_spacing(const Coupling& c)
{
    if (c.phase() == Phase::Critical)
        throw critical_point_error("level_spacing: spectrum collapses at lambda = 1; "
                                   "use the asymptote_* operations near the transition");
    const Modulus m = c.modulus();
    // pi K(k') / K(k), both integrals from one complement-aware evaluation.
    const EllipticPair p = elliptic_pair(m);
    return kPi * p.K_prime / p.K;
}

FermionSpectrum spectrum_for(const Coupling& c)
{
    return {level_spacing(c), c.phase() == Phase::Disordered ? Branch::Odd : Branch::Even};
}

double excitation(long j, const FermionSpectrum& s)
{
    if (j < 0)
        throw std::domain_error("excitation: ladder index must be nonnegative");
    const double mult = (s.branch == Branch::Odd) ? double(2 * j + 1) : double(2 * j);
    return mult * s.epsilon;
}

double log_partition(const FermionSpectrum& s, double tol, long max_terms)
{
    if (!(tol > 0.0))
        throw std::domain_error("log_partition: tolerance must be positive");
    if (!(s.epsilon > 0.0))
        throw std::domain_error("log_partition: level spacing must be positive");

    // Terms are bounded by exp(-eps_j), and the ladder increments by
    // 2 epsilon on both branches, so the tail past j is a geometric series
    // with ratio exp(-2 eps).
    const double stop = tol * (1.0 - std::exp(-2.0 * s.epsilon));
    double sum = 0.0;
    for (long j = 0; j < max_terms; ++j) {
        const double x = std::exp(-excitation(j, s));
        sum += std::log1p(x);
        if (x < stop)
            return sum;
    }
    throw convergence_error("log_partition: term cap " + std::to_string(max_terms)
                            + " exceeded before tolerance was met");
}

} // namespace ising
