#pragma once

#include "cylqd/magnetics.hpp"
#include "cylqd/moments.hpp"
#include "cylqd/spectrum.hpp"

#include <vector>

namespace cylqd::oracle {

/// Direct (rho, z) quadrature of the diamagnetic functional
/// J = (1/2c^2) int |Psi|^2 (A0 + grad f)^2 dV for one state, with the
/// azimuthal integral done in closed form for the chosen parity.
///
/// Tanh-sinh rules on [0, R], [R, rho_max] and [0, l]; the density is
/// tabulated once at construction so repeated evaluations are cheap.
class FunctionalQuadrature {
public:
    FunctionalQuadrature(const BoundState& state, const WellGeometry& geom, AngularParity parity,
                         int level = 5);

    /// J(lambda, mu) in hartree for the given field.
    [[nodiscard]] double operator()(const FieldSpec& field, double lambda, double mu) const;

    /// Axial sum of (2/l) sin^2 before renormalisation (1 up to quadrature error).
    [[nodiscard]] double norm() const { return norm_; }
    /// int f^2 rho d rho of the unnormalised radial function.
    [[nodiscard]] double radial_norm() const { return radial_norm_; }
    /// <rho^2> from the tanh-sinh nodes.
    [[nodiscard]] double rho2_mean() const;

    [[nodiscard]] double height() const { return height_; }

private:
    std::vector<double> rho_;
    std::vector<double> rho_w_; ///< weight * rho * f^2, normalised
    std::vector<double> z_;
    std::vector<double> z_w_;   ///< weight * (2/l) sin^2, normalised
    double x2_factor_;
    double height_;
    double norm_;
    double radial_norm_;
};

double numeric_functional(const BoundState& state, const WellGeometry& geom, const FieldSpec& field,
                          const GaugeFamily& gauge, AngularParity parity = AngularParity::azimuthal_average);

struct NumericMinimum {
    GaugeFamily params;
    double j_min;
    int sweeps; ///< Newton steps (1 for circular)
};

/// Minimise the quadrature functional over the circular (mu) or elliptic
/// (lambda, mu) family. Golden-section line searches with a parabolic polish;
/// the elliptic family then takes finite-difference Newton steps. Brackets
/// come only from geometry: mu in +-(|H/2 + lambda|) l, lambda in +-H.
NumericMinimum numeric_minimize(const FunctionalQuadrature& quad, const FieldSpec& field, GaugeKind kind);

NumericMinimum numeric_minimize(const BoundState& state, const WellGeometry& geom, const FieldSpec& field,
                                GaugeKind kind, AngularParity parity = AngularParity::azimuthal_average);

/// <rho^2> by dense composite Simpson on each side of R (brute-force check of
/// the adaptive moments quadrature).
struct DenseMoments {
    double norm;
    double rho2_mean;
};
DenseMoments quadrature_crosscheck(const BoundState& state, const WellGeometry& geom, int intervals = 200000);

} // namespace cylqd::oracle
