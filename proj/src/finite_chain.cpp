#include "ising/finite_chain.hpp"

#include "ising/errors.hpp"
#include "ising/linalg.hpp"
#include "ising/optimize.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ising {

ChainSpec::ChainSpec(int L_in, double lambda_in, int cut_in)
    : L(L_in), lambda(lambda_in), cut(cut_in < 0 ? L_in / 2 : cut_in)
{
    if (L < 2 || L > 14)
        throw std::domain_error("ChainSpec: L must lie in [2, 14]");
    if (!std::isfinite(lambda) || lambda <= 0.0)
        throw std::domain_error("ChainSpec: lambda must be finite and positive");
    if (cut < 1 || cut > L - 1)
        throw std::domain_error("ChainSpec: cut must lie in [1, L-1]");
}

HamiltonianOp::HamiltonianOp(const ChainSpec& spec) : L_(spec.L), dim_(1 << spec.L)
{
    diagonal_.resize(dim_);
    const unsigned bond_mask = (1u << (L_ - 1)) - 1u;
    for (int b = 0; b < dim_; ++b) {
        // Adjacent z spins agree where bit i equals bit i+1.
        const int differing = std::popcount((unsigned(b) ^ (unsigned(b) >> 1)) & bond_mask);
        const int alignment = (L_ - 1) - 2 * differing;
        diagonal_[b] = -spec.lambda * double(alignment);
    }
}

void HamiltonianOp::apply(std::span<const double> in, std::span<double> out) const
{
    if (in.size() != std::size_t(dim_) || out.size() != std::size_t(dim_))
        throw std::invalid_argument("HamiltonianOp::apply: dimension mismatch");
    for (int b = 0; b < dim_; ++b) {
        double acc = diagonal_[b] * in[b];
        for (int i = 0; i < L_; ++i)
            acc -= in[b ^ (1 << i)];
        out[b] = acc;
    }
}

HamiltonianOp build_hamiltonian(const ChainSpec& spec)
{
    return HamiltonianOp(spec);
}

std::vector<double> dense_hamiltonian(const ChainSpec& spec)
{
    const HamiltonianOp op(spec);
    const int n = op.dim();
    std::vector<double> h(std::size_t(n) * n, 0.0);
    std::vector<double> unit(n, 0.0), col(n);
    for (int j = 0; j < n; ++j) {
        unit[j] = 1.0;
        op.apply(unit, col);
        unit[j] = 0.0;
        for (int i = 0; i < n; ++i)
            h[std::size_t(i) * n + j] = col[i];
    }
    return h;
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

double norm(const std::vector<double>& a)
{
    return std::sqrt(dot(a, a));
}

} // namespace

GroundState ground_state(const ChainSpec& spec, double residual_tol, int max_iter)
{
    const HamiltonianOp op(spec);
    const int dim = op.dim();

    std::vector<double> start(dim, 1.0 / std::sqrt(double(dim)));
    std::vector<double> psi;
    double energy = 0.0;
    int applications = 0;

    const int max_basis = std::min(dim, 250);

    while (applications < max_iter) {
        // One Lanczos pass from `start`, fully reorthogonalized.
        std::vector<std::vector<double>> basis;
        basis.push_back(start);
        std::vector<double> alphas, betas;
        std::vector<double> w(dim);

        for (int m = 1; m <= max_basis && applications < max_iter; ++m) {
            const std::vector<double>& v = basis.back();
            op.apply(v, w);
            ++applications;
            alphas.push_back(dot(w, v));
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& u : basis) {
                    const double c = dot(w, u);
                    for (int i = 0; i < dim; ++i)
                        w[i] -= c * u[i];
                }
            const double beta = norm(w);

            const double theta = tridiag_smallest_eigenvalue(alphas, betas, m);
            const std::vector<double> y = tridiag_eigenvector(alphas, betas, m, theta);
            const bool exhausted = beta < 1e-14 * std::max(1.0, std::abs(theta));
            if (beta * std::abs(y[m - 1]) < 0.5 * residual_tol || exhausted || m == max_basis) {
                std::vector<double> candidate(dim, 0.0);
                for (int j = 0; j < m; ++j)
                    for (int i = 0; i < dim; ++i)
                        candidate[i] += y[j] * basis[j][i];
                const double nrm = norm(candidate);
                for (double& x : candidate)
                    x /= nrm;
                std::vector<double> r(dim);
                op.apply(candidate, r);
                ++applications;
                for (int i = 0; i < dim; ++i)
                    r[i] -= theta * candidate[i];
                psi = std::move(candidate);
                energy = theta;
                if (norm(r) < residual_tol) {
                    if (std::accumulate(psi.begin(), psi.end(), 0.0) < 0.0)
                        for (double& x : psi)
                            x = -x;
                    return {energy, std::move(psi), spec.L};
                }
                if (exhausted || m == max_basis)
                    break; // restart from the best candidate so far
            }
            if (exhausted)
                break;
            betas.push_back(beta);
            std::vector<double> next(dim);
            for (int i = 0; i < dim; ++i)
                next[i] = w[i] / beta;
            basis.push_back(std::move(next));
        }
        if (psi.empty())
            break;
        start = psi;
    }
    throw convergence_error("ground_state: no convergence within " + std::to_string(max_iter)
                            + " operator applications (near-degenerate spectrum?)");
}

SchmidtSpectrum schmidt_spectrum(std::span<const double> amplitudes, int sites, int cut)
{
    if (sites < 2 || cut < 1 || cut > sites - 1)
        throw std::domain_error("schmidt_spectrum: invalid cut");
    if (amplitudes.size() != std::size_t(1) << sites)
        throw std::invalid_argument("schmidt_spectrum: amplitude count != 2^L");

    // Reshape psi[x + (q << cut)] into a 2^cut x 2^(L-cut) array and take
    // the Gram matrix of the smaller side; its eigenvalues are the squared
    // singular values.
    const int rows = 1 << cut;
    const int cols = 1 << (sites - cut);
    const bool keep_rows = rows <= cols;
    const int n = keep_rows ? rows : cols;
    std::vector<double> gram(std::size_t(n) * n, 0.0);
    if (keep_rows) {
        for (int x = 0; x < rows; ++x)
            for (int xp = x; xp < rows; ++xp) {
                double s = 0.0;
                for (int q = 0; q < cols; ++q)
                    s += amplitudes[x + (q << cut)] * amplitudes[xp + (q << cut)];
                gram[std::size_t(x) * n + xp] = gram[std::size_t(xp) * n + x] = s;
            }
    } else {
        for (int q = 0; q < cols; ++q)
            for (int qp = q; qp < cols; ++qp) {
                double s = 0.0;
                for (int x = 0; x < rows; ++x)
                    s += amplitudes[x + (q << cut)] * amplitudes[x + (qp << cut)];
                gram[std::size_t(q) * n + qp] = gram[std::size_t(qp) * n + q] = s;
            }
    }

    EigenSystem es = jacobi_eigensystem(std::move(gram), n);
    SchmidtSpectrum spec;
    spec.probs.reserve(n);
    for (int j = n - 1; j >= 0; --j)
        if (es.values[j] >= 1e-16)
            spec.probs.push_back(es.values[j]);
    return spec;
}

SchmidtSpectrum schmidt_spectrum(const GroundState& g, int cut)
{
    return schmidt_spectrum(g.amplitudes, g.L, cut);
}

EntropyStats entropy_stats_from_spectrum(const SchmidtSpectrum& p)
{
    double total = 0.0;
    for (double pi : p.probs) {
        if (pi < 0.0)
            throw std::invalid_argument("entropy_stats_from_spectrum: negative probability");
        total += pi;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("entropy_stats_from_spectrum: spectrum sums to "
                                    + std::to_string(total) + ", not 1");
    double S = 0.0, m2 = 0.0;
    for (double pi : p.probs) {
        if (pi <= 0.0)
            continue; // zero eigenvalues contribute nothing
        const double l = std::log(pi);
        S -= pi * l;
        m2 += pi * l * l;
    }
    return make_entropy_stats(S, std::max(0.0, m2 - S * S));
}

double max_fluctuation_position(int L, double lo, double hi)
{
    if (!(lo > 0.0) || !(hi > lo))
        throw std::domain_error("max_fluctuation_position: need 0 < lo < hi");
    const auto dS_of = [&](double lambda) {
        const ChainSpec spec(L, lambda);
        return entropy_stats_from_spectrum(schmidt_spectrum(ground_state(spec), spec.cut)).dS;
    };
    const int n = 200;
    int best = 0;
    double best_val = -1.0;
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) {
        grid[i] = lo + (hi - lo) * double(i) / double(n - 1);
        const double v = dS_of(grid[i]);
        if (v > best_val) {
            best = i;
            best_val = v;
        }
    }
    if (best == 0 || best == n - 1)
        throw bracket_error("max_fluctuation_position: maximum of dS on the range boundary ["
                            + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return golden_max(dS_of, grid[best - 1], grid[best + 1], 1e-4).x;
}

} // namespace ising
