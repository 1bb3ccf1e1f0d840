#include "cylqd/errors.hpp"
#include "cylqd/oracle/fd_radial.hpp"
#include "cylqd/oracle/highprec.hpp"
#include "cylqd/spectrum.hpp"

#include <doctest.h>

#include <cmath>

using namespace cylqd;
using namespace cylqd::oracle;

TEST_CASE("counts and values match the Bessel solver")
{
    const WellGeometry g = WellGeometry::from_lab_units(2.75, 4.0, 1.0);
    for (int m = 0; m <= 2; ++m) {
        const auto exact = solve_radial_levels(m, g);
        const FdSpectrum fd = fd_radial_spectrum(m, g, default_fd_grid(m, g));
        REQUIRE(fd.levels.size() == exact.size());
        for (std::size_t i = 0; i < exact.size(); ++i) {
            CHECK(std::abs(fd.levels[i].energy - exact[i]) / exact[i] <= 1e-6);
            CHECK(std::abs(fd.levels[i].energy - exact[i]) <= 10.0 * fd.levels[i].error_estimate + 1e-12);
        }
    }
}

TEST_CASE("infinite-barrier limit")
{
    const WellGeometry g = WellGeometry::from_lab_units(2.75, 4.0, 1e4);
    const auto lv = fd_eigenvalues(0, g, 2000, g.radius() * 1.2, 0.1);
    REQUIRE_FALSE(lv.empty());
    const double j01 = bessel_j_zero(0, 1);
    const double hard_wall = 0.5 * j01 * j01 / (g.radius() * g.radius());
    CHECK(lv[0] < hard_wall);
    CHECK(std::abs(lv[0] - hard_wall) / hard_wall <= 3e-3);
}

TEST_CASE("centrifugal ordering")
{
    const WellGeometry g = WellGeometry::from_lab_units(2.75, 4.0, 1.0);
    const FdSpectrum s0 = fd_radial_spectrum(0, g, default_fd_grid(0, g));
    const FdSpectrum s1 = fd_radial_spectrum(1, g, default_fd_grid(1, g));
    REQUIRE_FALSE(s1.levels.empty());
    CHECK(s1.levels.front().energy > s0.levels.front().energy);
}

TEST_CASE("grid invariants are enforced")
{
    const WellGeometry g = WellGeometry::from_lab_units(2.75, 4.0, 1.0);
    FdGrid grid = default_fd_grid(0, g);
    CHECK(grid.n_points >= 500);
    FdGrid coarse = grid;
    coarse.n_points = 499;
    CHECK_THROWS_AS(fd_radial_spectrum(0, g, coarse), ResolutionError);
    FdGrid short_box = grid;
    short_box.rho_max = 1.5 * g.radius();
    CHECK_THROWS_AS(fd_radial_spectrum(0, g, short_box), ResolutionError);
}
