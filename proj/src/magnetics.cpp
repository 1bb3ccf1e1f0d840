#include "cylqd/magnetics.hpp"

#include "cylqd/errors.hpp"
#include "cylqd/units.hpp"

#include <cmath>

namespace cylqd {

namespace {

double inv_two_c2()
{
    const double c = codata2018().c_au;
    return 0.5 / (c * c);
}

} // namespace

FieldSpec::FieldSpec(double magnitude_au) : magnitude_(magnitude_au)
{
    if (!(magnitude_au >= 0.0) || !std::isfinite(magnitude_au)) {
        throw DomainError("FieldSpec: magnitude must be finite and >= 0");
    }
    beyond_weak_ = field_to_kOe(magnitude_au) > 100.0 * (1.0 + 1e-12);
}

FieldSpec FieldSpec::from_kOe(double kOe)
{
    if (!(kOe >= 0.0)) throw DomainError("FieldSpec: field must be >= 0 kOe");
    return FieldSpec(to_atomic_units({kOe, Unit::kOe}));
}

double first_order_correction(const BoundState& /*state*/, const FieldSpec& /*field*/)
{
    // W^H = -(i/2c)(2 A.grad + div A) is purely imaginary; its expectation
    // value in a real eigenfunction vanishes.
    return 0.0;
}

double functional_j(const MomentSet& mo, const FieldSpec& field, const GaugeFamily& gauge)
{
    const double h = field.magnitude();
    const double lam = gauge.effective_lambda();
    const double mu = gauge.mu;
    const double a = 0.5 * h + lam;
    const double b = lam - 0.5 * h;
    return inv_two_c2() * (a * a * mo.z2_mean + 2.0 * a * mu * mo.z_mean + mu * mu + b * b * mo.x2_mean);
}

GaugeGradient functional_j_gradient(const MomentSet& mo, const FieldSpec& field, const GaugeFamily& gauge)
{
    const double h = field.magnitude();
    const double lam = gauge.effective_lambda();
    const double mu = gauge.mu;
    const double a = 0.5 * h + lam;
    const double b = lam - 0.5 * h;
    const double s = inv_two_c2();
    return {s * (2.0 * a * mo.z2_mean + 2.0 * mu * mo.z_mean + 2.0 * b * mo.x2_mean),
            s * (2.0 * a * mo.z_mean + 2.0 * mu)};
}

MagneticCorrection circular_correction(const MomentSet& mo, const FieldSpec& field)
{
    const double h = field.magnitude();
    MagneticCorrection c{};
    c.kind = GaugeKind::circular;
    c.params_opt = {GaugeKind::circular, 0.0, -0.5 * h * mo.z_mean};
    c.e_h2 = 0.25 * h * h * inv_two_c2() * (mo.x2_mean + mo.var_z);
    return c;
}

MagneticCorrection elliptic_correction(const MomentSet& mo, const FieldSpec& field)
{
    const double h = field.magnitude();
    const double sum = mo.x2_mean + mo.var_z;
    const double lam = 0.5 * h * (mo.x2_mean - mo.var_z) / sum;
    MagneticCorrection c{};
    c.kind = GaugeKind::elliptic;
    c.params_opt = {GaugeKind::elliptic, lam, -(0.5 * h + lam) * mo.z_mean};
    c.e_h2 = h * h * inv_two_c2() * mo.x2_mean * mo.var_z / sum;
    return c;
}

std::vector<CorrectedLevel> corrected_spectrum(const std::vector<BoundState>& states, const WellGeometry& geom,
                                               const FieldSpec& field, AngularParity parity,
                                               const MomentOptions& opts)
{
    std::vector<CorrectedLevel> out;
    out.reserve(states.size());
    for (const BoundState& s : states) {
        CorrectedLevel lv{s, compute_moments(s, geom, parity, opts), {}, {}, 0.0, 0.0, 0.0};
        lv.circular = circular_correction(lv.moments, field);
        lv.elliptic = elliptic_correction(lv.moments, field);
        lv.e_mev = energy_to_mev(s.etotal);
        lv.e1_mev = energy_to_mev(s.etotal + lv.circular.e_h2);
        lv.e2_mev = energy_to_mev(s.etotal + lv.elliptic.e_h2);
        out.push_back(lv);
    }
    return out;
}

} // namespace cylqd
