#ifndef ISING_LINALG_HPP
#define ISING_LINALG_HPP

#include <vector>

namespace ising {

// Full eigensystem of a dense symmetric matrix. Eigenvalues ascending;
// eigenvector j occupies vectors[j*n .. j*n + n).
struct EigenSystem {
    int n = 0;
    std::vector<double> values;
    std::vector<double> vectors;
};

// Cyclic Jacobi rotations on a row-major symmetric matrix (copied in).
// Handles every dense eigenproblem in this project: the L <= 4 oracle
// Hamiltonians and the Gram matrices behind Schmidt spectra.
EigenSystem jacobi_eigensystem(std::vector<double> a, int n);

// Smallest eigenvalue of a symmetric tridiagonal matrix (diagonal d[0..m),
// off-diagonal e[0..m-1)) by Sturm-sequence bisection.
double tridiag_smallest_eigenvalue(const std::vector<double>& d,
                                   const std::vector<double>& e, int m);

// Unit eigenvector for an eigenvalue already known to machine accuracy,
// by inverse iteration with a partially pivoted tridiagonal solve.
std::vector<double> tridiag_eigenvector(const std::vector<double>& d,
                                        const std::vector<double>& e, int m,
                                        double eigenvalue);

} // namespace ising

#endif
