#pragma once

#include "cylqd/moments.hpp"
#include "cylqd/spectrum.hpp"

#include <optional>
#include <vector>

namespace cylqd {

/// Homogeneous field along +y (perpendicular to the cylinder axis).
class FieldSpec {
public:
    /// magnitude in Gaussian atomic units (e/a0^2), must be >= 0
    explicit FieldSpec(double magnitude_au);
    static FieldSpec from_kOe(double kOe);

    [[nodiscard]] double magnitude() const { return magnitude_; }
    /// Set above 100 kOe, the upper end of the weak-field regime.
    [[nodiscard]] bool beyond_weak_regime() const { return beyond_weak_; }

private:
    double magnitude_;
    bool beyond_weak_;
};

enum class GaugeKind { circular, elliptic };

/// Gradient transformation f(r) = lambda x z + mu x added to the symmetric
/// gauge A0 = (H z / 2, 0, -H x / 2). Circular is the lambda = 0 restriction.
struct GaugeFamily {
    GaugeKind kind;
    double lambda; ///< ignored (treated as 0) for circular
    double mu;

    [[nodiscard]] double effective_lambda() const { return kind == GaugeKind::circular ? 0.0 : lambda; }
};

struct MagneticCorrection {
    GaugeKind kind;
    double e_h2;               ///< quadratic field correction (hartree), >= 0
    GaugeFamily params_opt;    ///< minimising gauge parameters
    std::optional<double> j_numeric; ///< direct-quadrature value of min J, if computed
};

/// Linear-in-H correction <Psi0|W^H|Psi0>; identically zero for a real state.
double first_order_correction(const BoundState& state, const FieldSpec& field);

/// Diamagnetic functional J(f) = (1/2c^2) <(A0 + grad f)^2> in closed form:
/// (1/2c^2)[(H/2 + lambda)^2 <z^2> + 2 (H/2 + lambda) mu zbar + mu^2 + (lambda - H/2)^2 <x^2>].
double functional_j(const MomentSet& moments, const FieldSpec& field, const GaugeFamily& gauge);

/// (dJ/dlambda, dJ/dmu) of functional_j.
struct GaugeGradient {
    double d_lambda;
    double d_mu;
};
GaugeGradient functional_j_gradient(const MomentSet& moments, const FieldSpec& field, const GaugeFamily& gauge);

/// Minimum of J over f = mu x: mu = -(H/2) zbar, E = (H^2/8c^2)(<x^2> + var_z).
MagneticCorrection circular_correction(const MomentSet& moments, const FieldSpec& field);

/// Minimum of J over f = lambda x z + mu x:
/// lambda = (H/2)(<x^2> - var_z)/(<x^2> + var_z), mu = -(H/2 + lambda) zbar,
/// E = (H^2/2c^2) <x^2> var_z / (<x^2> + var_z).
MagneticCorrection elliptic_correction(const MomentSet& moments, const FieldSpec& field);

struct CorrectedLevel {
    BoundState state;
    MomentSet moments;
    MagneticCorrection circular;
    MagneticCorrection elliptic;
    double e_mev;  ///< unperturbed
    double e1_mev; ///< + circular correction
    double e2_mev; ///< + elliptic correction
};

/// Field-corrected energies for each state, preserving input order.
std::vector<CorrectedLevel> corrected_spectrum(const std::vector<BoundState>& states, const WellGeometry& geom,
                                               const FieldSpec& field, AngularParity parity,
                                               const MomentOptions& opts = {});

} // namespace cylqd
