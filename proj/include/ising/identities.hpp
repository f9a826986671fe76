#ifndef ISING_IDENTITIES_HPP
#define ISING_IDENTITIES_HPP

#include <array>
#include <string>
#include <vector>

namespace ising {

// One verified q-series identity: the truncated sum/product (lhs), the
// elliptic closed form (rhs), and their absolute defect.
struct IdentityReport {
    std::string name;
    double k = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double defect = 0.0;
    long terms_used = 1;
};

// Product identities for the nome q = q(k):
//   A1: prod_{j>=0} (1 + q^{2j+1}) = (16 q / (k^2 k'^2))^{1/24}
//   A2: prod_{j>=0} (1 + q^{2j})   = 2 (k^2 / (16 q k'))^{1/12}
// Products are accumulated in log space so small q cannot underflow.
// In all checks, tol is the truncation budget for the series side (the
// sums are cut once their tail bound is below tol/100), so a healthy
// defect lands well under it. The modulus must stay below 0.9999, where
// the nome is small enough for tail-bounded truncation; beyond that a
// range error is raised.
IdentityReport check_A1(double k, double tol = 1e-12, long max_terms = 1000000);
IdentityReport check_A2(double k, double tol = 1e-12, long max_terms = 1000000);

// First-moment sums:
//   A3: sum (2j+1) q^{2j+1}/(1+q^{2j+1}) = [1 - (1-2k^2)(2K/pi)^2] / 24
//   A4: sum 2j q^{2j}/(1+q^{2j})         = [(1-k^2/2)(2K/pi)^2 - 1] / 12
IdentityReport check_A3(double k, double tol = 1e-12, long max_terms = 1000000);
IdentityReport check_A4(double k, double tol = 1e-12, long max_terms = 1000000);

// Second-moment sums (these power the closed-form fluctuation formulas):
//   A5: sum (2j+1)^2 q^{2j+1}/(1+q^{2j+1})^2 = (2K^3/3pi^4)[(1-k^2)K - (1-2k^2)E]
//   A6: sum (2j)^2 q^{2j}/(1+q^{2j})^2       = (4K^3/3pi^4)[(1-k^2/2)E - (1-k^2)K]
IdentityReport check_A5(double k, double tol = 1e-12, long max_terms = 1000000);
IdentityReport check_A6(double k, double tol = 1e-12, long max_terms = 1000000);

// Derivative and Legendre relations:
//   dq/dk = pi^2 q / (2 k k'^2 K^2)   vs a central finite difference,
//   dK/dk = (E/k'^2 - K) / k          vs a central finite difference,
//   E K' + E' K - K K' = pi/2         exactly.
// Finite-difference defects bottom out near 1e-8; the Legendre defect is a
// straight double-precision check.
std::array<IdentityReport, 3> check_useful_relations(double k);

// Every family at one k, in reporting order A1..A6, dqdk, dIdk, legendre.
std::vector<IdentityReport> check_all(double k, double tol = 1e-12);

} // namespace ising

#endif
