#include "ising/finite_chain.hpp"

#include "ising/dimer.hpp"
#include "ising/errors.hpp"
#include "ising/infinite_entropy.hpp"
#include "ising/linalg.hpp"
#include "ising/optimize.hpp"

#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace ising;

TEST_SUITE_BEGIN("finite_chain");

TEST_CASE("chain parameters are validated")
{
    CHECK(ChainSpec(5, 1.0).cut == 2); // default half cut, rounded down
    CHECK(ChainSpec(6, 1.0).cut == 3);
    CHECK_THROWS_AS(ChainSpec(1, 1.0), std::domain_error);
    CHECK_THROWS_AS(ChainSpec(15, 1.0), std::domain_error);
    CHECK_THROWS_AS(ChainSpec(4, 0.0), std::domain_error);
    CHECK_THROWS_AS(ChainSpec(4, -2.0), std::domain_error);
    CHECK_THROWS_AS(ChainSpec(4, 1.0, 0), std::domain_error);
    CHECK_THROWS_AS(ChainSpec(4, 1.0, 4), std::domain_error);
}

TEST_CASE("two-site dense realization")
{
    const double lam = 1.7;
    const auto h = dense_hamiltonian(ChainSpec(2, lam));
    const std::vector<double> expect = {
        -lam, -1.0, -1.0, 0.0,
        -1.0, lam,  0.0,  -1.0,
        -1.0, 0.0,  lam,  -1.0,
        0.0,  -1.0, -1.0, -lam,
    };
    for (int i = 0; i < 16; ++i)
        CHECK(h[i] == doctest::Approx(expect[i]).epsilon(1e-15));
}

TEST_CASE("free spins ground energy is -L")
{
    for (int L : {2, 6, 10}) {
        // lambda = 0 is outside ChainSpec's domain; approach it instead
        const GroundState g = ground_state(ChainSpec(L, 1e-12));
        CHECK(g.energy == doctest::Approx(-double(L)).epsilon(1e-11));
        // product of x-polarized spins: flat amplitudes
        const double flat = 1.0 / std::sqrt(double(1 << L));
        for (double a : g.amplitudes)
            CHECK(a == doctest::Approx(flat).epsilon(1e-8));
    }
}

TEST_CASE("iterative solver matches the dense oracle at small L")
{
    for (double lam : {0.5, 1.0, 2.5}) {
        for (int L : {2, 3, 4}) {
            const auto es = jacobi_eigensystem(dense_hamiltonian(ChainSpec(L, lam)), 1 << L);
            const GroundState g = ground_state(ChainSpec(L, lam));
            CHECK(g.energy == doctest::Approx(es.values[0]).epsilon(1e-12));
        }
    }
}

TEST_CASE("two-site chain reproduces the dimer")
{
    CHECK(ground_state(ChainSpec(2, 1.0)).energy
          == doctest::Approx(-std::sqrt(5.0)).epsilon(1e-12));
    for (double lam : {0.5, 2.0}) {
        const GroundState g = ground_state(ChainSpec(2, lam));
        const DimerGround d = dimer_ground(lam);
        for (int i = 0; i < 4; ++i)
            CHECK(std::abs(g.amplitudes[i] - d.amplitudes[i]) < 1e-10);
    }
}

TEST_CASE("solver reports non-convergence when starved of iterations")
{
    CHECK_THROWS_AS(ground_state(ChainSpec(10, 1.0), 1e-10, /*max_iter=*/2), convergence_error);
}

TEST_CASE("residual and positivity of the computed ground state")
{
    const ChainSpec spec(12, 1.0);
    const GroundState g = ground_state(spec);
    const HamiltonianOp op(spec);
    std::vector<double> r(op.dim());
    op.apply(g.amplitudes, r);
    double rr = 0.0, nn = 0.0;
    for (int i = 0; i < op.dim(); ++i) {
        r[i] -= g.energy * g.amplitudes[i];
        rr += r[i] * r[i];
        nn += g.amplitudes[i] * g.amplitudes[i];
    }
    CHECK(std::sqrt(rr) < 1e-10);
    CHECK(std::abs(nn - 1.0) < 1e-12);

    for (double lam : {0.5, 1.0, 2.0}) {
        const GroundState p = ground_state(ChainSpec(9, lam));
        for (double a : p.amplitudes)
            CHECK(a > 0.0);
    }
}

TEST_CASE("Schmidt spectra of structured states")
{
    // near-product state at tiny coupling
    const ChainSpec spec(6, 1e-10);
    const SchmidtSpectrum sp = schmidt_spectrum(ground_state(spec), spec.cut);
    CHECK(sp.probs[0] == doctest::Approx(1.0).epsilon(1e-12));

    // two-site spectrum at lambda = 2: p+- = (1 +- sqrt(1 - C^2))/2
    const SchmidtSpectrum two = schmidt_spectrum(ground_state(ChainSpec(2, 2.0)), 1);
    REQUIRE(two.probs.size() == 2);
    const double r = std::sqrt(1.0 - 0.5); // C = 1/sqrt2
    CHECK(two.probs[0] == doctest::Approx(0.5 * (1.0 + r)).epsilon(1e-12));
    CHECK(two.probs[1] == doctest::Approx(0.5 * (1.0 - r)).epsilon(1e-12));

    double total = 0.0;
    for (double p : schmidt_spectrum(ground_state(ChainSpec(12, 1.0)), 6).probs)
        total += p;
    CHECK(std::abs(total - 1.0) < 1e-12);
}

TEST_CASE("Schmidt spectrum against an explicit partial trace")
{
    // reduced density matrix of sites 1..cut built entry by entry: sites
    // 1..cut live in the low bits of the basis index
    const ChainSpec spec(5, 1.3);
    const GroundState g = ground_state(spec);
    for (int cut : {1, 2, 3, 4}) {
        const int nx = 1 << cut;
        const int nq = 1 << (5 - cut);
        std::vector<double> rho(std::size_t(nx) * nx, 0.0);
        for (int x = 0; x < nx; ++x)
            for (int xp = 0; xp < nx; ++xp)
                for (int q = 0; q < nq; ++q)
                    rho[std::size_t(x) * nx + xp]
                        += g.amplitudes[x + (q << cut)] * g.amplitudes[xp + (q << cut)];
        auto es = jacobi_eigensystem(rho, nx);
        std::vector<double> expect(es.values.rbegin(), es.values.rend());
        const SchmidtSpectrum got = schmidt_spectrum(g, cut);
        for (std::size_t i = 0; i < got.probs.size(); ++i)
            CHECK(std::abs(got.probs[i] - expect[i]) < 1e-13);
    }
}

TEST_CASE("ground energies at the size cap match the free-fermion solution")
{
    // frozen from the exact quadratic-fermion (Jordan-Wigner) solution of
    // the open chain: E0 = -(1/2) sum of singular values of A + B
    CHECK(ground_state(ChainSpec(14, 1.0)).energy
          == doctest::Approx(-17.47100405473177).epsilon(1e-11));
    CHECK(ground_state(ChainSpec(14, 2.5)).energy
          == doctest::Approx(-34.11886585479854).epsilon(1e-11));
}

TEST_CASE("solver handles the nearly degenerate ordered phase")
{
    // lambda = 3, L = 13: the two lowest levels split only at order
    // lambda^-L, a stiff case for any iterative eigensolver
    const ChainSpec spec(13, 3.0);
    const GroundState g = ground_state(spec);
    const HamiltonianOp op(spec);
    std::vector<double> r(op.dim());
    op.apply(g.amplitudes, r);
    double rr = 0.0;
    for (int i = 0; i < op.dim(); ++i) {
        r[i] -= g.energy * g.amplitudes[i];
        rr += r[i] * r[i];
    }
    CHECK(std::sqrt(rr) < 1e-10);
    for (double a : g.amplitudes)
        CHECK(a > 0.0);
    // deep-ordered entanglement approaches the doubly degenerate ln 2
    const EntropyStats st = entropy_stats_from_spectrum(schmidt_spectrum(g, spec.cut));
    CHECK(st.S == doctest::Approx(std::log(2.0)).epsilon(0.05));
}

TEST_CASE("entropy statistics from explicit spectra")
{
    const EntropyStats pure = entropy_stats_from_spectrum({{1.0}});
    CHECK(pure.S == 0.0);
    CHECK(pure.D == 0.0);
    CHECK(pure.dS == 0.0);
    CHECK(!pure.delta.has_value());

    const EntropyStats bell = entropy_stats_from_spectrum({{0.5, 0.5}});
    CHECK(bell.S == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(bell.D == 0.0);
    REQUIRE(bell.delta.has_value());
    CHECK(*bell.delta == 0.0);

    // frozen two-term arithmetic for {0.9, 0.1}
    const EntropyStats two = entropy_stats_from_spectrum({{0.9, 0.1}});
    CHECK(two.S == doctest::Approx(0.32508297339144824).epsilon(1e-14));
    CHECK(two.D == doctest::Approx(0.43450162589252951).epsilon(1e-13));

    CHECK_THROWS_AS(entropy_stats_from_spectrum({{0.7, 0.2}}), std::invalid_argument);
    CHECK_THROWS_AS(entropy_stats_from_spectrum({{1.2, -0.2}}), std::invalid_argument);
}

TEST_CASE("cut symmetry of the entanglement entropy")
{
    for (double lam : {0.5, 1.0, 2.0}) {
        const GroundState g = ground_state(ChainSpec(10, lam));
        for (int cut = 1; cut <= 4; ++cut) {
            const EntropyStats a = entropy_stats_from_spectrum(schmidt_spectrum(g, cut));
            const EntropyStats b = entropy_stats_from_spectrum(schmidt_spectrum(g, 10 - cut));
            CHECK(std::abs(a.S - b.S) < 1e-12);
            CHECK(std::abs(a.D - b.D) < 1e-12);
        }
    }
}

TEST_CASE("half-cut entropy flows to the half-chain value away from criticality")
{
    const double S_inf = entropy_closed(Coupling(0.5));
    double prev_gap = 1e300;
    for (int L : {6, 8, 10, 12}) {
        const ChainSpec spec(L, 0.5);
        const double S = entropy_stats_from_spectrum(schmidt_spectrum(ground_state(spec), spec.cut)).S;
        const double gap = std::abs(S - S_inf);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 1e-2);
}

TEST_CASE("ground energy decreases with coupling strength")
{
    double prev = 1e300;
    for (int i = 0; i <= 10; ++i) {
        const double lam = 0.2 + 2.8 * i / 10.0;
        const double e = ground_state(ChainSpec(8, lam)).energy;
        CHECK(e < prev);
        prev = e;
    }
}

TEST_CASE("fluctuation maximum drifts toward the transition")
{
    const double m2 = max_fluctuation_position(2);
    // two sites: same curve as the dimer composition
    const double dimer_argmax
        = golden_max([](double lam) { return fluctuation_from_C(dimer_concurrence(lam)); },
                     0.2, 3.0, 1e-6).x;
    CHECK(std::abs(m2 - dimer_argmax) < 1e-3);
    CHECK(m2 > 1.0);
    CHECK(m2 < 1.6);

    // the peak moves from the dimer's 1.33 to within ~1% of the transition
    const double m4 = max_fluctuation_position(4);
    CHECK(std::abs(m4 - 1.0) < std::abs(m2 - 1.0));
    CHECK(std::abs(m4 - 1.0) < 0.02);

    // and its height grows with the chain length
    const auto height = [](int L, double lam) {
        const ChainSpec spec(L, lam);
        return entropy_stats_from_spectrum(schmidt_spectrum(ground_state(spec), spec.cut)).dS;
    };
    const double m8 = max_fluctuation_position(8);
    CHECK(height(4, m4) > height(2, m2));
    CHECK(height(8, m8) > height(4, m4));
}

TEST_CASE("fluctuation maximum is interior at L = 12")
{
    CHECK_NOTHROW(max_fluctuation_position(12));
    // a range whose dS maximum sits on the boundary must flag
    CHECK_THROWS_AS(max_fluctuation_position(4, 2.5, 3.5), bracket_error);
}

TEST_SUITE_END();
