#ifndef ISING_OPTIMIZE_HPP
#define ISING_OPTIMIZE_HPP

#include "ising/errors.hpp"

#include <cmath>
#include <utility>

namespace ising {

struct RootResult {
    double x;
    double fx;
    double bracket_width; // width of the final bracketing interval
};

// Brent's method on a bracketing interval [a, b] with f(a) f(b) <= 0.
// Combines bisection, secant and inverse quadratic steps; converges to
// |bracket| <= 2 * xtol or an exact zero. Throws bracket_error if the
// endpoints do not straddle a root.
template <typename F>
RootResult brent_root(F f, double a, double b, double xtol, int max_iter = 200)
{
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0)
        return {a, fa, 0.0};
    if (fb == 0.0)
        return {b, fb, 0.0};
    if ((fa > 0.0) == (fb > 0.0))
        throw bracket_error("brent_root: endpoints do not bracket a sign change");

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int it = 0; it < max_iter; ++it) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a; fc = fa; d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * 2.22e-16 * std::abs(b) + 0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0)
            return {b, fb, std::abs(c - b)};
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0)
                q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm; e = d;
            }
        } else {
            d = xm; e = d;
        }
        a = b; fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    throw convergence_error("brent_root: iteration cap reached");
}

struct MinResult {
    double x;
    double fx;
};

// Golden-section minimization of f on [a, b], narrowing the interval to
// xtol. No derivative or smoothness assumptions beyond unimodality.
template <typename F>
MinResult golden_min(F f, double a, double b, double xtol, int max_iter = 400)
{
    constexpr double invphi = 0.61803398874989484820; // 1/phi
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < max_iter && (b - a) > xtol; ++it) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return (f1 < f2) ? MinResult{x1, f1} : MinResult{x2, f2};
}

// Golden-section maximization (negates f).
template <typename F>
MinResult golden_max(F f, double a, double b, double xtol, int max_iter = 400)
{
    auto r = golden_min([&](double x) { return -f(x); }, a, b, xtol, max_iter);
    return {r.x, -r.fx};
}

// Locate a sign change of f over n grid points x_i (ascending, supplied by
// a generator i -> x_i) and polish with Brent. Throws bracket_error if no
// adjacent pair straddles a root.
template <typename F, typename Grid>
RootResult scan_then_brent(F f, Grid grid, int n, double xtol)
{
    double xprev = grid(0);
    double fprev = f(xprev);
    if (fprev == 0.0)
        return {xprev, 0.0, 0.0};
    for (int i = 1; i < n; ++i) {
        const double x = grid(i);
        const double fx = f(x);
        if (fx == 0.0)
            return {x, 0.0, 0.0};
        if ((fprev > 0.0) != (fx > 0.0))
            return brent_root(f, xprev, x, xtol);
        xprev = x;
        fprev = fx;
    }
    throw bracket_error("scan_then_brent: no sign change on the scan grid");
}

} // namespace ising

#endif
