#include "ising/identities.hpp"

#include "ising/detail/series_tails.hpp"
#include "ising/elliptic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ising {
namespace {

constexpr double kPi = 3.14159265358979323846;

struct Context {
    double k;
    double q;
    EllipticPair p;
};

Context context_for(double k, const char* who)
{
    if (!std::isfinite(k) || k <= 0.0 || k >= 1.0)
        throw std::domain_error(std::string(who) + ": modulus must lie strictly inside (0, 1)");
    if (k > 0.9999)
        throw std::range_error(std::string(who) + ": modulus above 0.9999 pushes the nome "
                               "too close to 1 for tail-bounded truncation");
    const Modulus m(k);
    return {k, nome(k), elliptic_pair(m)};
}

IdentityReport report(const char* name, double k, double lhs, double rhs, long terms)
{
    return {name, k, lhs, rhs, std::abs(lhs - rhs), terms};
}

// Log-space product sum_{j} ln(1 + q^{start + 2j}); tail bounded by the
// geometric remainder of sum q^m.
double log_product(double q, int start, double trunc, long max_terms, long& terms)
{
    const double y = q * q;
    double sum = 0.0;
    double qm = std::pow(q, start);
    for (long j = 0; j < max_terms; ++j) {
        sum += std::log1p(qm);
        ++terms;
        if (qm * y / (1.0 - y) < trunc)
            return sum;
        qm *= y;
    }
    throw std::runtime_error("identities: product truncation cap exceeded");
}

} // namespace

IdentityReport check_A1(double k, double tol, long max_terms)
{
    const Context c = context_for(k, "check_A1");
    long terms = 0;
    const double lhs = std::exp(log_product(c.q, 1, 0.01 * tol, max_terms, terms));
    const double kp2 = (1.0 - k) * (1.0 + k);
    const double rhs = std::exp((std::log(16.0 * c.q) - std::log(k * k * kp2)) / 24.0);
    return report("A1", k, lhs, rhs, terms);
}

IdentityReport check_A2(double k, double tol, long max_terms)
{
    const Context c = context_for(k, "check_A2");
    long terms = 1; // the j = 0 factor (1 + q^0) = 2
    const double lhs = 2.0 * std::exp(log_product(c.q, 2, 0.01 * tol, max_terms, terms));
    const double kp = std::sqrt((1.0 - k) * (1.0 + k));
    const double rhs = 2.0 * std::exp((std::log(k * k) - std::log(16.0 * c.q * kp)) / 12.0);
    return report("A2", k, lhs, rhs, terms);
}

IdentityReport check_A3(double k, double tol, long max_terms)
{
    const Context c = context_for(k, "check_A3");
    const double y = c.q * c.q;
    double sum = 0.0, qm = c.q;
    long terms = 0;
    for (long j = 0; j < max_terms; ++j) {
        const double m = double(2 * j + 1);
        sum += m * qm / (1.0 + qm);
        ++terms;
        if (qm * detail::tail_linear(m, 2.0, y) < 0.01 * tol)
            break;
        qm *= y;
    }
    const double twoIpi = 2.0 * c.p.K / kPi;
    const double rhs = (1.0 - (1.0 - 2.0 * k * k) * twoIpi * twoIpi) / 24.0;
    return report("A3", k, sum, rhs, terms);
}

IdentityReport check_A4(double k, double tol, long max_terms)
{
    const Context c = context_for(k, "check_A4");
    const double y = c.q * c.q;
    double sum = 0.0, qm = y; // j = 0 contributes nothing
    long terms = 1;
    for (long j = 1; j < max_terms; ++j) {
        const double m = double(2 * j);
        sum += m * qm / (1.0 + qm);
        ++terms;
        if (qm * detail::tail_linear(m, 2.0, y) < 0.01 * tol)
            break;
        qm *= y;
    }
    const double twoIpi = 2.0 * c.p.K / kPi;
    const double rhs = ((1.0 - 0.5 * k * k) * twoIpi * twoIpi - 1.0) / 12.0;
    return report("A4", k, sum, rhs, terms);
}

IdentityReport check_A5(double k, double tol, long max_terms)
{
    const Context c = context_for(k, "check_A5");
    const double y = c.q * c.q;
    double sum = 0.0, qm = c.q;
    long terms = 0;
    for (long j = 0; j < max_terms; ++j) {
        const double m = double(2 * j + 1);
        const double denom = 1.0 + qm;
        sum += m * m * qm / (denom * denom);
        ++terms;
        if (qm * detail::tail_quadratic(m, 2.0, y) < 0.01 * tol)
            break;
        qm *= y;
    }
    const double K = c.p.K, E = c.p.E, k2 = k * k;
    const double rhs = 2.0 * K * K * K / (3.0 * kPi * kPi * kPi * kPi)
                       * ((1.0 - k2) * K - (1.0 - 2.0 * k2) * E);
    return report("A5", k, sum, rhs, terms);
}

IdentityReport check_A6(double k, double tol, long max_terms)
{
    const Context c = context_for(k, "check_A6");
    const double y = c.q * c.q;
    double sum = 0.0, qm = y;
    long terms = 1;
    for (long j = 1; j < max_terms; ++j) {
        const double m = double(2 * j);
        const double denom = 1.0 + qm;
        sum += m * m * qm / (denom * denom);
        ++terms;
        if (qm * detail::tail_quadratic(m, 2.0, y) < 0.01 * tol)
            break;
        qm *= y;
    }
    const double K = c.p.K, E = c.p.E, k2 = k * k;
    const double rhs = 4.0 * K * K * K / (3.0 * kPi * kPi * kPi * kPi)
                       * ((1.0 - 0.5 * k2) * E - (1.0 - k2) * K);
    return report("A6", k, sum, rhs, terms);
}

std::array<IdentityReport, 3> check_useful_relations(double k)
{
    const Context c = context_for(k, "check_useful_relations");
    const double h = 1e-6;
    if (k - h <= 0.0 || k + h >= 1.0)
        throw std::domain_error("check_useful_relations: modulus too close to an endpoint "
                                "for the finite-difference comparison");

    const double dq_fd = (nome(k + h) - nome(k - h)) / (2.0 * h);
    const double dK_fd = (ellint_K(k + h) - ellint_K(k - h)) / (2.0 * h);
    const double legendre = c.p.E * c.p.K_prime + c.p.E_prime * c.p.K - c.p.K * c.p.K_prime;

    return {report("dqdk", k, dq_dk(k), dq_fd, 1),
            report("dIdk", k, dK_dk(k), dK_fd, 1),
            report("legendre", k, legendre, 0.5 * kPi, 1)};
}

std::vector<IdentityReport> check_all(double k, double tol)
{
    std::vector<IdentityReport> out;
    out.push_back(check_A1(k, tol));
    out.push_back(check_A2(k, tol));
    out.push_back(check_A3(k, tol));
    out.push_back(check_A4(k, tol));
    out.push_back(check_A5(k, tol));
    out.push_back(check_A6(k, tol));
    for (auto& r : check_useful_relations(k))
        out.push_back(r);
    return out;
}

} // namespace ising
