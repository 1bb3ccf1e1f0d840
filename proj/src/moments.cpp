#include "cylqd/moments.hpp"

#include "cylqd/errors.hpp"
#include "cylqd/quadrature.hpp"
#include "cylqd/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cylqd {

AngularParity parse_parity(std::string_view tag)
{
    if (tag == "cos" || tag == "cosine") return AngularParity::cosine;
    if (tag == "sin" || tag == "sine") return AngularParity::sine;
    if (tag == "avg" || tag == "azimuthal_average") return AngularParity::azimuthal_average;
    throw ConfigError("unknown parity '" + std::string(tag) + "' (expected cos, sin or avg)");
}

std::string_view parity_tag(AngularParity p)
{
    switch (p) {
    case AngularParity::cosine:
        return "cos";
    case AngularParity::sine:
        return "sin";
    case AngularParity::azimuthal_average:
        return "avg";
    }
    return "avg";
}

MomentSet MomentSet::shifted_z(double d) const
{
    MomentSet s = *this;
    s.z_mean = z_mean - d;
    s.z2_mean = z2_mean - 2.0 * d * z_mean + d * d;
    s.var_z = s.z2_mean - s.z_mean * s.z_mean;
    return s;
}

AxialMoments axial_moments(int kz, double height)
{
    if (kz < 1) throw DomainError("axial_moments: kz must be >= 1");
    if (!(height > 0.0)) throw DomainError("axial_moments: height must be > 0");
    const double l2 = height * height;
    const double osc = 1.0 / (2.0 * std::numbers::pi * std::numbers::pi * kz * kz);
    return {0.5 * height, l2 * (1.0 / 3.0 - osc), l2 * (1.0 / 12.0 - osc)};
}

AxialMoments axial_moments_quadrature(int kz, double height, int gl_order)
{
    if (kz < 1) throw DomainError("axial_moments_quadrature: kz must be >= 1");
    const GaussLegendreRule rule(gl_order);
    const double kpi = kz * std::numbers::pi / height;
    double m0 = 0.0;
    double m1 = 0.0;
    double m2 = 0.0;
    // One panel per half period of sin^2.
    for (int p = 0; p < kz; ++p) {
        const double a = p * height / kz;
        const double b = (p + 1) * height / kz;
        m0 += rule.integrate([&](double z) { return std::pow(std::sin(kpi * z), 2); }, a, b);
        m1 += rule.integrate([&](double z) { return z * std::pow(std::sin(kpi * z), 2); }, a, b);
        m2 += rule.integrate([&](double z) { return z * z * std::pow(std::sin(kpi * z), 2); }, a, b);
    }
    const double z_mean = m1 / m0;
    const double z2_mean = m2 / m0;
    // Central second moment, integrated directly to avoid cancellation.
    double c2 = 0.0;
    for (int p = 0; p < kz; ++p) {
        const double a = p * height / kz;
        const double b = (p + 1) * height / kz;
        c2 += rule.integrate([&](double z) { return (z - z_mean) * (z - z_mean) * std::pow(std::sin(kpi * z), 2); },
                             a, b);
    }
    return {z_mean, z2_mean, c2 / m0};
}

namespace {

struct RadialProfile {
    int m;
    double kin;
    double kappa;
    double radius;
    double amp;

    double operator()(double rho) const
    {
        if (rho <= radius) return specfun::bessel_j(m, kin * rho);
        return amp * specfun::bessel_k_scaled(m, kappa * rho) * std::exp(-kappa * (rho - radius));
    }
};

RadialProfile profile_of(const BoundState& s, const WellGeometry& geom)
{
    return {s.qn.m, s.kin, s.kappa, geom.radius(), s.outside_amp};
}

double tail_rho_max(const BoundState& s, const WellGeometry& geom, const MomentOptions& opts)
{
    return geom.radius() + opts.tail_decay_lengths / s.kappa;
}

} // namespace

RadialMoments radial_moments(const BoundState& state, const WellGeometry& geom, const MomentOptions& opts)
{
    const RadialProfile f = profile_of(state, geom);
    const double r = geom.radius();
    const double rho_max = tail_rho_max(state, geom, opts);
    const GaussLegendreRule rule(opts.gl_order);

    const int inner_panels = 1 + static_cast<int>(state.kin * r / std::numbers::pi);
    const int tail_panels = 1 + static_cast<int>(opts.tail_decay_lengths / 2.0);

    auto inner1 = [&](double rho) { const double v = f(rho); return v * v * rho; };
    auto inner3 = [&](double rho) { const double v = f(rho); return v * v * rho * rho * rho; };

    const QuadratureResult in1 = adaptive_gauss_legendre(inner1, 0.0, r, rule, opts.rel_tol, inner_panels);
    const QuadratureResult in3 = adaptive_gauss_legendre(inner3, 0.0, r, rule, opts.rel_tol, inner_panels);
    const QuadratureResult out1 = adaptive_gauss_legendre(inner1, r, rho_max, rule, opts.rel_tol, tail_panels);
    const QuadratureResult out3 = adaptive_gauss_legendre(inner3, r, rho_max, rule, opts.rel_tol, tail_panels);

    // Lommel: int_0^R J_m(k rho)^2 rho d rho = R^2/2 [J'_m(kR)^2 + (1 - m^2/(kR)^2) J_m(kR)^2]
    const int m = state.qn.m;
    const double u = state.kin * r;
    const specfun::JPair j = specfun::bessel_j_pair(m, u);
    const double lommel = 0.5 * r * r * (j.prime * j.prime + (1.0 - static_cast<double>(m) * m / (u * u)) * j.value * j.value);

    RadialMoments out{};
    out.norm = in1.value + out1.value;
    out.rho2_mean = (in3.value + out3.value) / out.norm;
    out.inner_norm = in1.value;
    out.lommel_norm = lommel;
    out.norm_residual = (in1.value - lommel) / lommel;
    out.rho_max = rho_max;
    // The tail weight beyond rho_max decays at least like exp(-2 kappa (rho - R)).
    out.truncation_bound = std::exp(-2.0 * opts.tail_decay_lengths) * (out1.value / out.norm)
                           * std::pow(rho_max / r, 3);
    return out;
}

double x2_factor(int m, AngularParity parity)
{
    if (m == 1 && parity == AngularParity::cosine) return 0.75;
    if (m == 1 && parity == AngularParity::sine) return 0.25;
    return 0.5;
}

double x2_from_rho2(int m, double rho2_mean, AngularParity parity)
{
    return x2_factor(m, parity) * rho2_mean;
}

MomentSet compute_moments(const BoundState& state, const WellGeometry& geom, AngularParity parity,
                          const MomentOptions& opts)
{
    const AxialMoments ax = axial_moments(state.qn.kz, geom.height());
    const RadialMoments rad = radial_moments(state, geom, opts);
    MomentSet s{};
    s.z_mean = ax.z_mean;
    s.z2_mean = ax.z2_mean;
    s.var_z = ax.var_z;
    s.rho2_mean = rad.rho2_mean;
    s.x2_mean = x2_from_rho2(state.qn.m, rad.rho2_mean, parity);
    s.parity = parity;
    s.norm_residual = rad.norm_residual;
    s.truncation_bound = rad.truncation_bound;
    if (!(s.var_z > 0.0 && s.rho2_mean > 0.0 && s.x2_mean > 0.0)) {
        throw NumericalError("compute_moments: non-positive second moment");
    }
    return s;
}

DensityModel::DensityModel(const BoundState& state, const WellGeometry& geom, const MomentOptions& opts)
    : state_(state), radius_(geom.radius()), height_(geom.height())
{
    const RadialMoments rad = radial_moments(state, geom, opts);
    rho_max_ = rad.rho_max;
    norm_ = rad.norm;
}

double DensityModel::radial(double rho) const
{
    const RadialProfile f{state_.qn.m, state_.kin, state_.kappa, radius_, state_.outside_amp};
    return f(rho);
}

double DensityModel::operator()(double rho, double z) const
{
    if (!(rho >= 0.0) || !(z >= 0.0 && z <= height_)) {
        throw DomainError("eval_density: (rho, z) outside rho >= 0, 0 <= z <= l");
    }
    if (z == 0.0 || z == height_) return 0.0;
    const double f = radial(rho);
    const double s = std::sin(state_.qn.kz * std::numbers::pi * z / height_);
    return f * f * (2.0 / height_) * s * s / (2.0 * std::numbers::pi * norm_);
}

double eval_density(const BoundState& state, const WellGeometry& geom, double rho, double z)
{
    return DensityModel(state, geom)(rho, z);
}

} // namespace cylqd
