#include "ising/generalized_entropy.hpp"

#include "ising/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ising {
namespace {

void require_alpha_positive(double alpha, const char* who)
{
    if (!std::isfinite(alpha) || alpha <= 0.0)
        throw std::domain_error(std::string(who) + ": alpha must be finite and positive");
}

void require_alpha_not_one(double alpha, const char* who)
{
    require_alpha_positive(alpha, who);
    if (alpha == 1.0)
        throw std::invalid_argument(std::string(who) + ": alpha = 1 is the von Neumann "
                                    "limit; use the entropy operations directly");
}

} // namespace

double log_trace_rho_alpha(const SchmidtSpectrum& p, double alpha)
{
    require_alpha_positive(alpha, "log_trace_rho_alpha");
    double sum = 0.0;
    for (double pi : p.probs)
        if (pi > 0.0)
            sum += std::pow(pi, alpha);
    return std::log(sum);
}

double log_trace_rho_alpha(const FermionSpectrum& s, double alpha, double tol, long max_terms)
{
    require_alpha_positive(alpha, "log_trace_rho_alpha");
    if (!(s.epsilon > 0.0))
        throw std::domain_error("log_trace_rho_alpha: level spacing must be positive");
    // Each ladder mode contributes ln(1+e^{-alpha eps_j}) - alpha ln(1+e^{-eps_j});
    // both pieces shrink geometrically (ratios e^{-2 alpha eps}, e^{-2 eps}).
    const double y = std::exp(-2.0 * s.epsilon);
    const double ya = std::exp(-2.0 * alpha * s.epsilon);
    double sum = 0.0;
    for (long j = 0; j < max_terms; ++j) {
        const double ej = excitation(j, s);
        const double x = std::exp(-ej);
        const double xa = std::exp(-alpha * ej);
        sum += std::log1p(xa) - alpha * std::log1p(x);
        const double tail = xa * ya / (1.0 - ya) + alpha * x * y / (1.0 - y);
        if (tail < tol)
            return sum;
    }
    throw convergence_error("log_trace_rho_alpha: term cap exceeded");
}

double renyi(const SchmidtSpectrum& p, double alpha)
{
    require_alpha_not_one(alpha, "renyi");
    return log_trace_rho_alpha(p, alpha) / (1.0 - alpha);
}

double renyi(const FermionSpectrum& s, double alpha, double tol)
{
    require_alpha_not_one(alpha, "renyi");
    return log_trace_rho_alpha(s, alpha, tol) / (1.0 - alpha);
}

double tsallis(const SchmidtSpectrum& p, double alpha)
{
    require_alpha_not_one(alpha, "tsallis");
    return -std::expm1(log_trace_rho_alpha(p, alpha)) / (alpha - 1.0);
}

double tsallis(const FermionSpectrum& s, double alpha, double tol)
{
    require_alpha_not_one(alpha, "tsallis");
    return -std::expm1(log_trace_rho_alpha(s, alpha, tol)) / (alpha - 1.0);
}

double renyi_from_tsallis(double t, double alpha)
{
    require_alpha_not_one(alpha, "renyi_from_tsallis");
    const double arg = 1.0 + (1.0 - alpha) * t;
    if (!(arg > 0.0))
        throw std::domain_error("renyi_from_tsallis: 1 + (1-alpha) t must be positive");
    return std::log(arg) / (1.0 - alpha);
}

double tsallis_from_renyi(double r, double alpha)
{
    require_alpha_not_one(alpha, "tsallis_from_renyi");
    return std::expm1((1.0 - alpha) * r) / (1.0 - alpha);
}

double tsallis_moment_expansion(const EntropyStats& moments, double alpha)
{
    return moments.S - 0.5 * (alpha - 1.0) * moments.second_moment;
}

namespace {

// Five-point central-difference moments of f(alpha) = Tr rho^alpha at
// alpha = 1; the step balances truncation against rounding for these
// smooth trace functions.
constexpr double kMomentStep = 1e-4;

template <typename F>
double moment_from_trace(F trace, int n)
{
    if (n != 1 && n != 2)
        throw std::invalid_argument("moment_by_alpha_derivative: n must be 1 or 2");
    const double h = kMomentStep;
    const double fp2 = trace(1.0 + 2.0 * h);
    const double fp1 = trace(1.0 + h);
    const double fm1 = trace(1.0 - h);
    const double fm2 = trace(1.0 - 2.0 * h);
    if (n == 1)
        return -(-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
    const double f0 = trace(1.0);
    return (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
}

} // namespace

double moment_by_alpha_derivative(const SchmidtSpectrum& p, int n)
{
    return moment_from_trace(
        [&](double a) { return std::exp(log_trace_rho_alpha(p, a)); }, n);
}

double moment_by_alpha_derivative(const FermionSpectrum& s, int n, double tol)
{
    return moment_from_trace(
        [&](double a) { return std::exp(log_trace_rho_alpha(s, a, tol)); }, n);
}

double cft_trace_asymptote(double xi, double c, double alpha, int boundaries)
{
    if (!(xi > 1.0))
        throw std::domain_error("cft_trace_asymptote: correlation length must exceed 1");
    if (!(c > 0.0))
        throw std::domain_error("cft_trace_asymptote: central charge must be positive");
    if (boundaries < 1)
        throw std::domain_error("cft_trace_asymptote: need at least one boundary point");
    require_alpha_positive(alpha, "cft_trace_asymptote");
    return std::pow(xi, -double(boundaries) * c * (alpha - 1.0 / alpha) / 12.0);
}

double cft_S(double xi, double c, int boundaries)
{
    if (!(xi > 1.0))
        throw std::domain_error("cft_S: correlation length must exceed 1");
    if (!(c > 0.0))
        throw std::domain_error("cft_S: central charge must be positive");
    if (boundaries < 1)
        throw std::domain_error("cft_S: need at least one boundary point");
    return double(boundaries) * (c / 6.0) * std::log(xi);
}

} // namespace ising
