#ifndef ISING_ENTROPY_STATS_HPP
#define ISING_ENTROPY_STATS_HPP

#include <optional>

namespace ising {

// Moments of the entropy operator -ln(rho) for one reduced state, all in
// nats: the entanglement entropy S, the dispersion D, the absolute
// fluctuation dS = sqrt(D), the relative fluctuation delta = dS / S, and
// the raw second moment <S^2> = D + S^2. delta is reported as nullopt when
// S = 0 (product states), where the ratio has no meaning.
struct EntropyStats {
    double S;
    double D;
    double dS;
    std::optional<double> delta;
    double second_moment;
};

// Assemble the bundle from the first two cumulants.
EntropyStats make_entropy_stats(double S, double D);

} // namespace ising

#endif
