#include "cylqd/errors.hpp"
#include "cylqd/oracle/highprec.hpp"
#include "cylqd/specfun.hpp"
#include "cylqd/spectrum.hpp"
#include "cylqd/units.hpp"

#include <doctest.h>

#include <cmath>

using namespace cylqd;

namespace {

WellGeometry reference_well()
{
    return WellGeometry::from_lab_units(2.75, 4.0, 1.0);
}

} // namespace

TEST_CASE("geometry validation")
{
    CHECK_THROWS_AS(WellGeometry(0.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(WellGeometry(1.0, -1.0, 1.0), DomainError);
    CHECK_THROWS_AS(WellGeometry(1.0, 1.0, INFINITY), DomainError);
    const WellGeometry g = reference_well();
    CHECK(g.strength() == doctest::Approx(g.radius() * std::sqrt(2.0 * g.barrier())));
}

TEST_CASE("radial_mismatch domain and value at a J0 zero")
{
    const WellGeometry g = reference_well();
    CHECK_THROWS_AS(radial_mismatch(0, 0.0, g), DomainError);
    CHECK_THROWS_AS(radial_mismatch(0, g.barrier(), g), DomainError);
    const double j01 = oracle::bessel_j_zero(0, 1);
    const double kin = j01 / g.radius();
    const double e = 0.5 * kin * kin;
    const double kappa = std::sqrt(2.0 * (g.barrier() - e));
    const double expected = kin * specfun::bessel_j_prime(0, j01) * specfun::bessel_k_scaled(0, kappa * g.radius());
    CHECK(radial_mismatch(0, e, g) == doctest::Approx(expected).epsilon(1e-9));
    CHECK(radial_mismatch(0, e, g) != 0.0);
}

TEST_CASE("one sign change below the first J0 zero")
{
    const WellGeometry g = reference_well();
    const double j01 = oracle::bessel_j_zero(0, 1);
    int changes = 0;
    double prev = matching_function(0, 1e-4, g);
    for (int i = 1; i <= 20000; ++i) {
        const double u = 1e-4 + (j01 - 2e-4) * i / 20000.0;
        const double v = matching_function(0, u, g);
        if ((v < 0.0) != (prev < 0.0)) ++changes;
        prev = v;
    }
    CHECK(changes == 1);
}

TEST_CASE("reference-geometry levels")
{
    const WellGeometry g = reference_well();
    const auto m0 = solve_radial_levels(0, g);
    REQUIRE(m0.size() == 5);
    CHECK(energy_to_mev(m0[0]) == doctest::Approx(25.3867).epsilon(1e-5));
    const double j01 = oracle::bessel_j_zero(0, 1);
    CHECK(std::sqrt(2.0 * m0[0]) * g.radius() < j01);
    for (int m = 0; m <= 3; ++m) {
        const auto lv = solve_radial_levels(m, g);
        CHECK(lv.size() == count_radial_sign_changes(m, g));
        for (std::size_t i = 0; i < lv.size(); ++i) {
            CHECK(lv[i] < g.barrier());
            if (i > 0) CHECK(lv[i] > lv[i - 1]);
            const double u = std::sqrt(2.0 * lv[i]) * g.radius();
            CHECK(u < oracle::bessel_j_zero(m, static_cast<int>(i) + 1));
        }
    }
}

TEST_CASE("no bound level gives an empty list")
{
    // X = 1 lies below j_{0,1}, the m = 1 binding threshold; m = 0 binds at any depth.
    const WellGeometry g(1.0, 1.0, 0.5);
    CHECK(solve_radial_levels(1, g).empty());
    CHECK(solve_radial_levels(0, g).size() == 1);
}

TEST_CASE("levels rise with the barrier")
{
    double prev = 0.0;
    for (double v0 : {0.5, 1.0, 3.0, 10.0, 100.0}) {
        const auto lv = solve_radial_levels(1, WellGeometry::from_lab_units(2.75, 4.0, v0));
        REQUIRE_FALSE(lv.empty());
        CHECK(lv[0] > prev);
        prev = lv[0];
    }
    const WellGeometry g = reference_well();
    const double j11 = oracle::bessel_j_zero(1, 1);
    CHECK(prev < 0.5 * j11 * j11 / (g.radius() * g.radius()));
}

TEST_CASE("scaling law R -> sR, V0 -> V0/s^2")
{
    const WellGeometry g = reference_well();
    for (double s : {0.5, 2.0, 3.3}) {
        const WellGeometry gs(s * g.radius(), g.height(), g.barrier() / (s * s));
        for (int m = 0; m <= 2; ++m) {
            const auto a = solve_radial_levels(m, g);
            const auto b = solve_radial_levels(m, gs);
            REQUIRE(a.size() == b.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                CHECK(std::abs(b[i] * s * s - a[i]) / a[i] <= 1e-9);
            }
        }
    }
}

TEST_CASE("axial energies")
{
    const WellGeometry g = reference_well();
    CHECK(energy_to_mev(axial_energy(1, g)) == doctest::Approx(23.5019).epsilon(1e-5));
    CHECK(axial_energy(2, g) / axial_energy(1, g) == 4.0);
    CHECK_THROWS_AS(axial_energy(0, g), DomainError);
}

TEST_CASE("state enumeration")
{
    const WellGeometry g = reference_well();
    const StateTable t = enumerate_states(g, 2, 10);
    REQUIRE(t.per_m.size() == 3);
    for (int m = 0; m <= 2; ++m) {
        REQUIRE(t.per_m[m].size() == 10);
        CHECK(t.complete[m]);
        for (std::size_t i = 1; i < 10; ++i) CHECK(t.per_m[m][i].etotal >= t.per_m[m][i - 1].etotal);
    }
    CHECK(t.per_m[0][0].etotal < t.per_m[1][0].etotal);
    CHECK(t.per_m[1][0].etotal < t.per_m[2][0].etotal);

    const StateTable one = enumerate_states(g, 3, 1);
    for (const auto& group : one.per_m) {
        CHECK(group.front().qn.k == 1);
        CHECK(group.front().qn.kz == 1);
    }
}

TEST_CASE("incomplete table is flagged")
{
    const WellGeometry g(1.0, 1.0, 0.5);
    const StateTable t = enumerate_states(g, 1, 3);
    CHECK(t.per_m[0].size() == 3);
    CHECK(t.per_m[1].empty());
    CHECK_FALSE(t.complete[1]);
}

TEST_CASE("bound-state invariants")
{
    const WellGeometry g = reference_well();
    const StateTable t = enumerate_states(g, 2, 10);
    for (const auto& group : t.per_m) {
        for (const BoundState& s : group) {
            CHECK(s.exy > 0.0);
            CHECK(s.exy < g.barrier());
            CHECK(std::abs(s.kin * s.kin + s.kappa * s.kappa - 2.0 * g.barrier()) <= 1e-12 * 2.0 * g.barrier());
            CHECK(s.etotal == s.exy + s.ez);
        }
    }
    CHECK_THROWS(BoundState::make({0, 1, 1}, 0.5 * g.barrier(), axial_energy(1, g), g));
}

TEST_CASE("eigen-equation sign audit")
{
    const WellGeometry g = reference_well();
    const StateTable t = enumerate_states(g, 2, 4);
    for (const BoundState& s : t.per_m[0]) {
        const SignAudit a = audit_eigen_equation_sign(s, g);
        CHECK(a.satisfies_derived);
    }
    for (int m = 1; m <= 2; ++m) {
        for (const BoundState& s : t.per_m[m]) {
            const SignAudit a = audit_eigen_equation_sign(s, g);
            CHECK(a.satisfies_derived);
            CHECK_FALSE(a.satisfies_printed);
        }
    }
}
