#ifndef ISING_ERRORS_HPP
#define ISING_ERRORS_HPP

#include <stdexcept>

namespace ising {

// Raised when a spectrum-dependent quantity is requested at the quantum
// critical point lambda = 1, where the level spacing vanishes and every
// series/closed form degenerates. Callers wanting behaviour near the
// transition should use the asymptote_* operations instead.
class critical_point_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A truncated series or iterative solver exceeded its term/iteration cap
// before reaching the requested tolerance.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A sign scan failed to bracket a root, or a scanned extremum landed on a
// grid endpoint (so the reported maximum would not be interior).
class bracket_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ising

#endif
