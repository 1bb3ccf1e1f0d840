#include "cylqd/errors.hpp"
#include "cylqd/magnetics.hpp"
#include "cylqd/units.hpp"

#include <doctest.h>

#include <cmath>

using namespace cylqd;

namespace {

MomentSet sample(double x2, double z_mean, double var_z)
{
    MomentSet m{};
    m.z_mean = z_mean;
    m.var_z = var_z;
    m.z2_mean = var_z + z_mean * z_mean;
    m.rho2_mean = 2.0 * x2;
    m.x2_mean = x2;
    m.parity = AngularParity::azimuthal_average;
    return m;
}

double inv_two_c2()
{
    const double c = codata2018().c_au;
    return 0.5 / (c * c);
}

} // namespace

TEST_CASE("field spec")
{
    CHECK_THROWS_AS(FieldSpec(-1.0), DomainError);
    CHECK_FALSE(FieldSpec::from_kOe(100.0).beyond_weak_regime());
    CHECK(FieldSpec::from_kOe(150.0).beyond_weak_regime());
    CHECK(FieldSpec::from_kOe(0.0).magnitude() == 0.0);
}

TEST_CASE("first-order correction vanishes")
{
    const BoundState s = enumerate_states(WellGeometry::from_lab_units(2.75, 4.0, 1.0), 0, 1).per_m[0][0];
    CHECK(first_order_correction(s, FieldSpec::from_kOe(100.0)) == 0.0);
    CHECK(first_order_correction(s, FieldSpec::from_kOe(0.0)) == 0.0);
}

TEST_CASE("functional in the bare symmetric gauge")
{
    const MomentSet m = sample(300.0, 37.0, 330.0);
    const FieldSpec f(1e-4);
    const double h = f.magnitude();
    const double bare = functional_j(m, f, {GaugeKind::elliptic, 0.0, 0.0});
    CHECK(bare == doctest::Approx(h * h / 8.0 * (m.z2_mean + m.x2_mean) * 2.0 * inv_two_c2()).epsilon(1e-14));
}

TEST_CASE("zero field is a positive quadratic form in the parameters")
{
    const MomentSet m = sample(300.0, 37.0, 330.0);
    const FieldSpec f(0.0);
    CHECK(functional_j(m, f, {GaugeKind::elliptic, 0.0, 0.0}) == 0.0);
    CHECK(functional_j(m, f, {GaugeKind::elliptic, 1e-3, 0.0}) > 0.0);
    CHECK(functional_j(m, f, {GaugeKind::elliptic, 0.0, 1e-3}) > 0.0);
    CHECK(functional_j(m, f, {GaugeKind::elliptic, 1e-3, -37e-3}) > 0.0);
    const MagneticCorrection c = circular_correction(m, f);
    CHECK(c.e_h2 == 0.0);
    CHECK(c.params_opt.mu == 0.0);
    CHECK(elliptic_correction(m, f).e_h2 == 0.0);
}

TEST_CASE("circular family ignores lambda")
{
    const MomentSet m = sample(300.0, 37.0, 330.0);
    const FieldSpec f(1e-4);
    CHECK(functional_j(m, f, {GaugeKind::circular, 5.0, 1e-3}) == functional_j(m, f, {GaugeKind::circular, 0.0, 1e-3}));
}

TEST_CASE("closed-form optima are stationary")
{
    const MomentSet m = sample(420.0, 37.8, 310.0);
    const FieldSpec f(4.25e-4);
    const MagneticCorrection c = circular_correction(m, f);
    const MagneticCorrection e = elliptic_correction(m, f);
    const double scale = inv_two_c2() * f.magnitude() * 37.8;
    CHECK(std::abs(functional_j_gradient(m, f, c.params_opt).d_mu) <= 1e-12 * scale);
    const GaugeGradient g = functional_j_gradient(m, f, e.params_opt);
    CHECK(std::abs(g.d_mu) <= 1e-12 * scale);
    CHECK(std::abs(g.d_lambda) <= 1e-12 * scale * 37.8);
    CHECK(functional_j(m, f, c.params_opt) == doctest::Approx(c.e_h2).epsilon(1e-13));
    CHECK(functional_j(m, f, e.params_opt) == doctest::Approx(e.e_h2).epsilon(1e-13));
}

TEST_CASE("isotropic case: elliptic gains nothing")
{
    const MomentSet m = sample(330.0, 37.0, 330.0);
    const FieldSpec f(4e-4);
    const MagneticCorrection e = elliptic_correction(m, f);
    CHECK(e.params_opt.lambda == 0.0);
    CHECK(e.e_h2 == doctest::Approx(circular_correction(m, f).e_h2).epsilon(1e-15));
}

TEST_CASE("H^2 scaling and ordering")
{
    const MomentSet m = sample(500.0, 37.0, 200.0);
    const FieldSpec f(3e-4);
    const FieldSpec f2(6e-4);
    const double c1 = circular_correction(m, f).e_h2;
    const double c2 = circular_correction(m, f2).e_h2;
    CHECK(std::abs(c2 / c1 - 4.0) <= 4e-15);
    const double e1 = elliptic_correction(m, f).e_h2;
    CHECK(e1 < c1);
    CHECK(c1 < functional_j(m, f, {GaugeKind::circular, 0.0, 0.0}));
}

TEST_CASE("translation covariance")
{
    const MomentSet m = sample(500.0, 37.0, 200.0);
    const FieldSpec f(3e-4);
    for (double d : {-20.0, 5.0, 300.0}) {
        const MomentSet s = m.shifted_z(d);
        CHECK(std::abs(circular_correction(s, f).e_h2 / circular_correction(m, f).e_h2 - 1.0) <= 1e-12);
        CHECK(std::abs(elliptic_correction(s, f).e_h2 / elliptic_correction(m, f).e_h2 - 1.0) <= 1e-12);
        CHECK(circular_correction(s, f).params_opt.mu != circular_correction(m, f).params_opt.mu);
    }
}

TEST_CASE("corrected spectrum columns")
{
    const WellGeometry g = WellGeometry::from_lab_units(2.75, 4.0, 1.0);
    const auto states = enumerate_states(g, 1, 4).per_m[1];
    const auto zero = corrected_spectrum(states, g, FieldSpec(0.0), AngularParity::azimuthal_average);
    for (const auto& lv : zero) {
        CHECK(lv.e1_mev == lv.e_mev);
        CHECK(lv.e2_mev == lv.e_mev);
    }
    const auto on = corrected_spectrum(states, g, FieldSpec::from_kOe(100.0), AngularParity::cosine);
    REQUIRE(on.size() == states.size());
    for (std::size_t i = 0; i < on.size(); ++i) {
        CHECK(on[i].state.qn == states[i].qn);
        CHECK(on[i].e2_mev <= on[i].e1_mev);
        CHECK(on[i].e1_mev > on[i].e_mev);
    }
}
