#include "ising/infinite_entropy.hpp"

#include "ising/detail/series_tails.hpp"
#include "ising/errors.hpp"
#include "ising/optimize.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace ising {
namespace {

using detail::tail_linear;
using detail::tail_quadratic;

constexpr double kPi = 3.14159265358979323846;

void require_off_critical(const Coupling& c, const char* who)
{
    if (c.phase() == Phase::Critical)
        throw critical_point_error(std::string(who) + ": undefined at lambda = 1; "
                                   "use the asymptote_* operations near the transition");
}

template <typename Summand, typename Tail>
double ladder_sum(const FermionSpectrum& s, double tol, long max_terms,
                  Summand summand, Tail tail, const char* who)
{
    const double y = std::exp(-2.0 * s.epsilon);
    double sum = 0.0;
    for (long j = 0; j < max_terms; ++j) {
        const double ej = excitation(j, s);
        sum += summand(ej);
        if (std::exp(-ej) * tail(ej, y) < tol)
            return sum;
    }
    throw convergence_error(std::string(who) + ": term cap " + std::to_string(max_terms)
                            + " exceeded before tolerance was met");
}

} // namespace

double entropy_series(const Coupling& c, double tol, long max_terms)
{
    require_off_critical(c, "entropy_series");
    if (!(tol > 0.0))
        throw std::domain_error("entropy_series: tolerance must be positive");
    const FermionSpectrum s = spectrum_for(c);
    return ladder_sum(
        s, tol, max_terms,
        [](double ej) {
            const double x = std::exp(-ej);
            return ej * x / (1.0 + x) + std::log1p(x);
        },
        // summand <= (1 + eps_j) exp(-eps_j)
        [&](double ej, double y) { return tail_linear(1.0 + ej, 2.0 * s.epsilon, y); },
        "entropy_series");
}

double dispersion_series(const Coupling& c, double tol, long max_terms)
{
    require_off_critical(c, "dispersion_series");
    if (!(tol > 0.0))
        throw std::domain_error("dispersion_series: tolerance must be positive");
    const FermionSpectrum s = spectrum_for(c);
    return ladder_sum(
        s, tol, max_terms,
        [](double ej) {
            const double h = 0.5 * ej;
            const double sech = 1.0 / std::cosh(h);
            return h * h * sech * sech;
        },
        // summand <= eps_j^2 exp(-eps_j)
        [&](double ej, double y) { return tail_quadratic(ej, 2.0 * s.epsilon, y); },
        "dispersion_series");
}

double entropy_closed(const Coupling& c)
{
    require_off_critical(c, "entropy_closed");
    const Modulus m = c.modulus();
    const EllipticPair p = elliptic_pair(m);
    const double k2 = m.k * m.k;
    const double kp2 = m.k_prime * m.k_prime;
    double S;
    if (c.phase() == Phase::Disordered)
        S = (std::log(16.0 / (k2 * kp2)) + (4.0 / kPi) * (k2 - kp2) * p.K * p.K_prime) / 24.0;
    else
        S = (std::log(k2 / (16.0 * m.k_prime)) + (4.0 / kPi) * (1.0 - 0.5 * k2) * p.K * p.K_prime) / 12.0
            + std::log(2.0);
    // deep in the disordered phase S -> 0 through cancellation of large
    // logarithms; rounding residue below ~1e-12 is truncated to keep the
    // entropy nonnegative
    if (S < 0.0 && S > -1e-12)
        S = 0.0;
    return S;
}

double fluctuation_closed(const Coupling& c)
{
    require_off_critical(c, "fluctuation_closed");
    const Modulus m = c.modulus();
    const EllipticPair p = elliptic_pair(m);
    const double k2 = m.k * m.k;
    const double kp2 = m.k_prime * m.k_prime;

    double radicand, prefactor;
    if (c.phase() == Phase::Disordered) {
        radicand = kp2 * p.K + (k2 - kp2) * p.E;
        prefactor = (1.0 / kPi) * p.K_prime * std::sqrt((2.0 / 3.0) * p.K);
    } else {
        radicand = (1.0 - 0.5 * k2) * p.E - kp2 * p.K;
        prefactor = (2.0 / kPi) * p.K_prime * std::sqrt(p.K / 3.0);
    }
    if (radicand < 0.0) {
        // The ordered-phase radicand is O(k^4), so deep in that phase the
        // subtraction can round below zero; anything past rounding level
        // means a wrong formula.
        if (radicand > -1e-12)
            radicand = 0.0;
        else
            throw std::logic_error("fluctuation_closed: negative radicand "
                                   + std::to_string(radicand) + " at lambda = "
                                   + std::to_string(c.lambda()));
    }
    return prefactor * std::sqrt(radicand);
}

EntropyStats stats(const Coupling& c)
{
    const double S = entropy_closed(c);
    const double dS = fluctuation_closed(c);
    return make_entropy_stats(S, dS * dS);
}

namespace {

double asymptote_amplitude(double lambda, const char* who)
{
    const double dist = std::abs(1.0 - lambda);
    if (!std::isfinite(lambda) || dist <= 0.0 || dist >= 1.0)
        throw std::domain_error(std::string(who) + ": requires 0 < |1 - lambda| < 1");
    return std::log(1.0 / dist) / 12.0;
}

} // namespace

double asymptote_S(double lambda)
{
    return asymptote_amplitude(lambda, "asymptote_S");
}

double asymptote_D(double lambda)
{
    return asymptote_amplitude(lambda, "asymptote_D");
}

double asymptote_second_moment(double lambda)
{
    const double a = asymptote_amplitude(lambda, "asymptote_second_moment");
    return a * a + a;
}

double find_lambda_f_infinite()
{
    // dS - S changes sign once inside (0.99, 1); scan log-spaced in the
    // distance to the critical point, then polish.
    const auto f = [](double lambda) {
        const Coupling c(lambda);
        return fluctuation_closed(c) - entropy_closed(c);
    };
    const int n = 101;
    const auto grid = [&](int i) {
        return 1.0 - std::pow(10.0, -2.0 - 5.0 * double(i) / double(n - 1));
    };
    return scan_then_brent(f, grid, n, 1e-9).x;
}

std::pair<double, double> find_lambda_m()
{
    const auto delta_of = [](double lambda) {
        const EntropyStats st = stats(Coupling(lambda));
        return st.delta.value_or(0.0);
    };
    // delta varies over several decades of lambda - 1, so scan log-spaced
    // before refining.
    const int n = 1000;
    std::vector<double> grid(n), val(n);
    for (int i = 0; i < n; ++i) {
        grid[i] = 1.0 + std::pow(10.0, -6.0 + 6.0 * double(i) / double(n - 1));
        val[i] = delta_of(grid[i]);
    }
    int best = 0;
    for (int i = 1; i < n; ++i)
        if (val[i] > val[best])
            best = i;
    if (best == 0 || best == n - 1)
        throw bracket_error("find_lambda_m: scan maximum on a grid endpoint");
    const MinResult m = golden_max(delta_of, grid[best - 1], grid[best + 1], 1e-6);
    return {m.x, m.fx};
}

} // namespace ising
