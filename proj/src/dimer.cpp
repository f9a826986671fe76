#include "ising/dimer.hpp"

#include "ising/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ising {
namespace {

void require_concurrence_range(double C, const char* who)
{
    if (!std::isfinite(C) || C < 0.0 || C > 1.0)
        throw std::domain_error(std::string(who) + ": concurrence must lie in [0, 1]");
}

double xlogx(double p)
{
    return p > 0.0 ? p * std::log(p) : 0.0;
}

} // namespace

std::array<double, 4> dimer_spectrum(double lambda)
{
    if (!std::isfinite(lambda))
        throw std::domain_error("dimer_spectrum: lambda must be finite");
    const double s = std::sqrt(lambda * lambda + 4.0);
    std::array<double, 4> levels{-s, -lambda, lambda, s};
    std::sort(levels.begin(), levels.end());
    return levels;
}

DimerGround dimer_ground(double lambda)
{
    if (!std::isfinite(lambda))
        throw std::domain_error("dimer_ground: lambda must be finite");
    const double s = std::sqrt(lambda * lambda + 4.0);
    const double u = lambda + s; // positive for either sign of lambda
    const double d = 2.0 * (u * u + 4.0);
    const double inv = 1.0 / std::sqrt(d);
    return {-s, {u * inv, 2.0 * inv, 2.0 * inv, u * inv}, d};
}

double concurrence_of_state(const std::array<double, 4>& a)
{
    const double norm2 = a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3];
    if (std::abs(norm2 - 1.0) > 1e-10)
        throw std::invalid_argument("concurrence_of_state: state is not normalized");
    const double C = 2.0 * std::abs(a[0] * a[3] - a[1] * a[2]);
    return std::clamp(C, 0.0, 1.0);
}

double dimer_concurrence(double lambda)
{
    if (!std::isfinite(lambda))
        throw std::domain_error("dimer_concurrence: lambda must be finite");
    return std::abs(lambda) / std::sqrt(lambda * lambda + 4.0);
}

double entropy_from_C(double C)
{
    require_concurrence_range(C, "entropy_from_C");
    const double r = std::sqrt((1.0 - C) * (1.0 + C));
    return -xlogx(0.5 * (1.0 + r)) - xlogx(0.5 * (1.0 - r));
}

double fluctuation_from_C(double C)
{
    require_concurrence_range(C, "fluctuation_from_C");
    if (C == 0.0)
        return 0.0;
    const double r = std::sqrt((1.0 - C) * (1.0 + C));
    return C * std::log((1.0 + r) / C);
}

double dimer_lambda_f()
{
    const auto f = [](double lambda) {
        const double C = dimer_concurrence(lambda);
        return fluctuation_from_C(C) - entropy_from_C(C);
    };
    const int n = 17;
    const auto grid = [](int i) { return 1.0 + 4.0 * double(i) / 16.0; };
    return scan_then_brent(f, grid, n, 1e-9).x;
}

} // namespace ising
