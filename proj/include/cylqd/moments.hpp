#pragma once

#include "cylqd/spectrum.hpp"

#include <string_view>

namespace cylqd {

/// Real angular factor of a state with m >= 1: cos(m phi), sin(m phi), or the
/// average of the two (equivalently the complex e^{i m phi} density).
enum class AngularParity { cosine, sine, azimuthal_average };

AngularParity parse_parity(std::string_view tag); // "cos" | "sin" | "avg"
std::string_view parity_tag(AngularParity p);

/// Density moments of |Psi|^2 for one unperturbed state (atomic units).
struct MomentSet {
    double z_mean;
    double z2_mean;
    double var_z;
    double rho2_mean;
    double x2_mean;
    AngularParity parity;
    double norm_residual;
    double truncation_bound; ///< bound on the <rho^2> weight lost beyond rho_max

    /// Same state described with the z origin moved to z = d.
    [[nodiscard]] MomentSet shifted_z(double d) const;
};

struct AxialMoments {
    double z_mean;
    double z2_mean;
    double var_z;
};

/// Closed forms for the sin^2 axial density: z_mean = l/2,
/// <z^2> = l^2 (1/3 - 1/(2 pi^2 kz^2)), var = l^2 (1/12 - 1/(2 pi^2 kz^2)).
AxialMoments axial_moments(int kz, double height);

/// Same moments by Gauss-Legendre quadrature of (2/l) sin^2(kz pi z / l).
AxialMoments axial_moments_quadrature(int kz, double height, int gl_order = 32);

struct MomentOptions {
    int gl_order = 16;
    double rel_tol = 1e-14;
    double tail_decay_lengths = 40.0; ///< rho_max = R + tail_decay_lengths / kappa
};

struct RadialMoments {
    double rho2_mean;
    double norm;          ///< int_0^rho_max f(rho)^2 rho d rho, f = J_m(kin rho) inside
    double inner_norm;    ///< interior part by quadrature
    double lommel_norm;   ///< interior part in closed form
    double norm_residual; ///< (inner_norm - lommel_norm) / lommel_norm
    double rho_max;
    double truncation_bound; ///< bound on the neglected tail fraction of the norm
};

RadialMoments radial_moments(const BoundState& state, const WellGeometry& geom, const MomentOptions& opts = {});

/// <x^2>/<rho^2>: 1/2 except m = 1 cosine (3/4) and m = 1 sine (1/4).
double x2_factor(int m, AngularParity parity);
double x2_from_rho2(int m, double rho2_mean, AngularParity parity);

MomentSet compute_moments(const BoundState& state, const WellGeometry& geom,
                          AngularParity parity = AngularParity::azimuthal_average,
                          const MomentOptions& opts = {});

/// Azimuth-averaged probability density p(rho, z) = (1/2pi) int |Psi|^2 dphi,
/// normalised so that int p 2 pi rho d rho dz = 1 over [0, rho_max] x [0, l].
class DensityModel {
public:
    DensityModel(const BoundState& state, const WellGeometry& geom, const MomentOptions& opts = {});

    [[nodiscard]] double operator()(double rho, double z) const;
    [[nodiscard]] double radial(double rho) const; ///< unnormalised f(rho)
    [[nodiscard]] double rho_max() const { return rho_max_; }
    [[nodiscard]] const BoundState& state() const { return state_; }

private:
    BoundState state_;
    double radius_;
    double height_;
    double rho_max_;
    double norm_;
};

/// One-shot p(rho, z); builds a DensityModel per call.
double eval_density(const BoundState& state, const WellGeometry& geom, double rho, double z);

} // namespace cylqd
