#include "ising/optimize.hpp"

#include "doctest.h"

#include <cmath>

using namespace ising;

TEST_SUITE_BEGIN("optimize");

TEST_CASE("brent finds simple roots")
{
    auto r = brent_root([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-12);
    CHECK(r.x == doctest::Approx(std::sqrt(2.0)).epsilon(1e-11));

    auto r2 = brent_root([](double x) { return std::cos(x) - x; }, 0.0, 1.0, 1e-12);
    CHECK(r2.x == doctest::Approx(0.7390851332151607).epsilon(1e-10));
}

TEST_CASE("brent requires a sign change")
{
    CHECK_THROWS_AS(brent_root([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-10),
                    bracket_error);
}

TEST_CASE("golden section narrows to the minimum")
{
    auto m = golden_min([](double x) { return (x - 1.3) * (x - 1.3) + 0.25; }, 0.0, 3.0, 1e-9);
    CHECK(m.x == doctest::Approx(1.3).epsilon(1e-7));
    CHECK(m.fx == doctest::Approx(0.25).epsilon(1e-12));

    auto mx = golden_max([](double x) { return -(x - 0.7) * (x - 0.7); }, 0.0, 2.0, 1e-9);
    CHECK(mx.x == doctest::Approx(0.7).epsilon(1e-7));
}

TEST_CASE("scan locates the bracket before polishing")
{
    auto r = scan_then_brent([](double x) { return std::sin(x); },
                             [](int i) { return 2.0 + 0.2 * i; }, 12, 1e-12);
    CHECK(r.x == doctest::Approx(3.14159265358979).epsilon(1e-10));
    CHECK_THROWS_AS(scan_then_brent([](double) { return 1.0; },
                                    [](int i) { return double(i); }, 5, 1e-10),
                    bracket_error);
}

TEST_SUITE_END();
