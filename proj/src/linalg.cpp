#include "ising/linalg.hpp"

#include "ising/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ising {

EigenSystem jacobi_eigensystem(std::vector<double> a, int n)
{
    if (n <= 0 || a.size() != std::size_t(n) * n)
        throw std::invalid_argument("jacobi_eigensystem: bad dimensions");

    std::vector<double> v(std::size_t(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        v[std::size_t(i) * n + i] = 1.0;

    const auto off_norm = [&] {
        double s = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                s += a[std::size_t(p) * n + q] * a[std::size_t(p) * n + q];
        return std::sqrt(2.0 * s);
    };

    double scale = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            scale = std::max(scale, std::abs(a[std::size_t(i) * n + j]));
    const double stop = std::max(scale, 1.0) * 1e-15 * n;

    for (int sweep = 0; sweep < 100 && off_norm() > stop; ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[std::size_t(p) * n + q];
                if (std::abs(apq) <= 1e-300)
                    continue;
                const double app = a[std::size_t(p) * n + p];
                const double aqq = a[std::size_t(q) * n + q];
                const double theta = 0.5 * (aqq - app) / apq;
                const double t = (theta >= 0.0 ? 1.0 : -1.0)
                                 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int i = 0; i < n; ++i) {
                    const double aip = a[std::size_t(i) * n + p];
                    const double aiq = a[std::size_t(i) * n + q];
                    a[std::size_t(i) * n + p] = c * aip - s * aiq;
                    a[std::size_t(i) * n + q] = s * aip + c * aiq;
                }
                for (int j = 0; j < n; ++j) {
                    const double apj = a[std::size_t(p) * n + j];
                    const double aqj = a[std::size_t(q) * n + j];
                    a[std::size_t(p) * n + j] = c * apj - s * aqj;
                    a[std::size_t(q) * n + j] = s * apj + c * aqj;
                }
                for (int i = 0; i < n; ++i) {
                    const double vip = v[std::size_t(i) * n + p];
                    const double viq = v[std::size_t(i) * n + q];
                    v[std::size_t(i) * n + p] = c * vip - s * viq;
                    v[std::size_t(i) * n + q] = s * vip + c * viq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return a[std::size_t(i) * n + i] < a[std::size_t(j) * n + j];
    });

    EigenSystem es;
    es.n = n;
    es.values.resize(n);
    es.vectors.resize(std::size_t(n) * n);
    for (int j = 0; j < n; ++j) {
        es.values[j] = a[std::size_t(order[j]) * n + order[j]];
        for (int i = 0; i < n; ++i)
            es.vectors[std::size_t(j) * n + i] = v[std::size_t(i) * n + order[j]];
    }
    return es;
}

namespace {

// Number of eigenvalues of the tridiagonal matrix strictly below x.
int sturm_count(const std::vector<double>& d, const std::vector<double>& e, int m, double x)
{
    int count = 0;
    double q = 1.0;
    for (int i = 0; i < m; ++i) {
        const double e2 = (i == 0) ? 0.0 : e[i - 1] * e[i - 1];
        q = d[i] - x - (q != 0.0 ? e2 / q : e2 / 1e-300);
        if (q < 0.0)
            ++count;
    }
    return count;
}

} // namespace

double tridiag_smallest_eigenvalue(const std::vector<double>& d,
                                   const std::vector<double>& e, int m)
{
    if (m <= 0)
        throw std::invalid_argument("tridiag_smallest_eigenvalue: empty matrix");
    double lo = d[0], hi = d[0];
    for (int i = 0; i < m; ++i) {
        const double r = (i > 0 ? std::abs(e[i - 1]) : 0.0)
                         + (i + 1 < m ? std::abs(e[i]) : 0.0);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(d, e, m, mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> tridiag_eigenvector(const std::vector<double>& d,
                                        const std::vector<double>& e, int m,
                                        double eigenvalue)
{
    // Inverse iteration: a couple of solves of (T - theta I) x = b with a
    // slightly perturbed shift keep the near-singular system tractable.
    double norm_scale = 0.0;
    for (int i = 0; i < m; ++i)
        norm_scale = std::max(norm_scale, std::abs(d[i]) + (i + 1 < m ? std::abs(e[i]) : 0.0));
    const double shift = eigenvalue - 1e-13 * std::max(1.0, norm_scale);

    std::vector<double> x(m, 1.0 / std::sqrt(double(m)));
    for (int pass = 0; pass < 3; ++pass) {
        // LU with partial pivoting on the tridiagonal (band of width 2).
        std::vector<double> diag(m), sup1(m, 0.0), sup2(m, 0.0), rhs = x;
        for (int i = 0; i < m; ++i)
            diag[i] = d[i] - shift;
        for (int i = 0; i + 1 < m; ++i)
            sup1[i] = e[i];
        std::vector<double> sub(m, 0.0);
        for (int i = 1; i < m; ++i)
            sub[i] = e[i - 1];

        for (int i = 0; i + 1 < m; ++i) {
            if (std::abs(sub[i + 1]) > std::abs(diag[i])) {
                std::swap(diag[i], sub[i + 1]);
                std::swap(sup1[i], diag[i + 1]);
                std::swap(sup2[i], sup1[i + 1]);
                std::swap(rhs[i], rhs[i + 1]);
            }
            if (diag[i] == 0.0)
                diag[i] = 1e-300;
            const double f = sub[i + 1] / diag[i];
            diag[i + 1] -= f * sup1[i];
            sup1[i + 1] -= f * sup2[i];
            rhs[i + 1] -= f * rhs[i];
        }
        if (diag[m - 1] == 0.0)
            diag[m - 1] = 1e-300;
        for (int i = m - 1; i >= 0; --i) {
            double acc = rhs[i];
            if (i + 1 < m)
                acc -= sup1[i] * x[i + 1];
            if (i + 2 < m)
                acc -= sup2[i] * x[i + 2];
            x[i] = acc / diag[i];
        }
        double nrm = 0.0;
        for (double xi : x)
            nrm += xi * xi;
        nrm = std::sqrt(nrm);
        if (!(nrm > 0.0))
            throw convergence_error("tridiag_eigenvector: inverse iteration broke down");
        for (double& xi : x)
            xi /= nrm;
    }
    return x;
}

} // namespace ising
