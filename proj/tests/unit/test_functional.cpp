#include "cylqd/errors.hpp"
#include "cylqd/magnetics.hpp"
#include "cylqd/oracle/functional.hpp"

#include <doctest.h>

#include <cmath>

using namespace cylqd;
using namespace cylqd::oracle;

namespace {

WellGeometry reference_well()
{
    return WellGeometry::from_lab_units(2.75, 4.0, 1.0);
}

} // namespace

TEST_CASE("zero field and zero parameters give zero")
{
    const WellGeometry g = reference_well();
    const BoundState s = enumerate_states(g, 0, 1).per_m[0][0];
    CHECK(numeric_functional(s, g, FieldSpec(0.0), {GaugeKind::elliptic, 0.0, 0.0}) == 0.0);
    const NumericMinimum m = numeric_minimize(s, g, FieldSpec(0.0), GaugeKind::elliptic);
    CHECK(m.j_min == 0.0);
    CHECK(m.params.mu == 0.0);
    CHECK(m.params.lambda == 0.0);
}

TEST_CASE("quadrature functional matches the closed form")
{
    const WellGeometry g = reference_well();
    const FieldSpec f = FieldSpec::from_kOe(100.0);
    const StateTable t = enumerate_states(g, 2, 3);
    for (const auto& group : t.per_m) {
        for (const BoundState& s : group) {
            for (auto parity : {AngularParity::cosine, AngularParity::sine, AngularParity::azimuthal_average}) {
                const MomentSet ms = compute_moments(s, g, parity);
                const FunctionalQuadrature q(s, g, parity);
                CHECK(std::abs(q.rho2_mean() - ms.rho2_mean) / ms.rho2_mean <= 1e-10);
                for (GaugeFamily p : {GaugeFamily{GaugeKind::elliptic, 0.0, 0.0},
                                      circular_correction(ms, f).params_opt, elliptic_correction(ms, f).params_opt,
                                      GaugeFamily{GaugeKind::elliptic, 3e-4, -0.02}}) {
                    const double closed = functional_j(ms, f, p);
                    CHECK(std::abs(q(f, p.effective_lambda(), p.mu) - closed) / closed <= 1e-8);
                }
            }
        }
    }
}

TEST_CASE("numeric minimisation recovers the closed-form optima")
{
    const WellGeometry g = reference_well();
    const FieldSpec f = FieldSpec::from_kOe(100.0);
    const double h = f.magnitude();
    const StateTable t = enumerate_states(g, 2, 2);
    for (const auto& group : t.per_m) {
        for (const BoundState& s : group) {
            const MomentSet ms = compute_moments(s, g);
            const MagneticCorrection c = circular_correction(ms, f);
            const MagneticCorrection e = elliptic_correction(ms, f);
            const FunctionalQuadrature q(s, g, AngularParity::azimuthal_average);
            const NumericMinimum nc = numeric_minimize(q, f, GaugeKind::circular);
            const NumericMinimum ne = numeric_minimize(q, f, GaugeKind::elliptic);
            CHECK(std::abs(nc.j_min - c.e_h2) / c.e_h2 <= 1e-8);
            CHECK(std::abs(ne.j_min - e.e_h2) / e.e_h2 <= 1e-8);
            CHECK(std::abs(nc.params.mu - (-0.5 * h * ms.z_mean)) <= 1e-6 * h * g.height());
            CHECK(std::abs(ne.params.lambda - e.params_opt.lambda) <= 1e-6 * h);
            CHECK(ne.j_min <= nc.j_min);
            CHECK(numeric_functional(s, g, f, c.params_opt) >= e.e_h2);
        }
    }
}
