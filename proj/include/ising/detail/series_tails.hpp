#ifndef ISING_DETAIL_SERIES_TAILS_HPP
#define ISING_DETAIL_SERIES_TAILS_HPP

namespace ising::detail {

// Exact geometric-polynomial sums used as truncation bounds for ladder and
// q-series summation: sum_{t>=1} (a + b t) y^t and sum_{t>=1} (a + b t)^2 y^t
// for 0 < y < 1.
inline double tail_linear(double a, double b, double y)
{
    const double g = y / (1.0 - y);
    return a * g + b * g / (1.0 - y);
}

inline double tail_quadratic(double a, double b, double y)
{
    const double g = y / (1.0 - y);
    return a * a * g + 2.0 * a * b * g / (1.0 - y)
           + b * b * g * (1.0 + y) / ((1.0 - y) * (1.0 - y));
}

} // namespace ising::detail

#endif
