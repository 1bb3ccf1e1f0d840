#pragma once

#include <cstddef>
#include <vector>

namespace cylqd {

/// Cylinder of radius R and height l: V = 0 inside, V0 for rho > R, hard
/// walls at z = 0 and z = l. All values in atomic units.
class WellGeometry {
public:
    WellGeometry(double radius, double height, double barrier);

    /// Geometry from nm / nm / eV.
    static WellGeometry from_lab_units(double radius_nm, double height_nm, double barrier_ev);

    [[nodiscard]] double radius() const { return radius_; }
    [[nodiscard]] double height() const { return height_; }
    [[nodiscard]] double barrier() const { return barrier_; }
    /// X = R sqrt(2 V0); in-plane wavenumbers satisfy (kR)^2 + (kappa R)^2 = X^2.
    [[nodiscard]] double strength() const { return strength_; }

private:
    double radius_;
    double height_;
    double barrier_;
    double strength_;
};

struct QuantumNumbers {
    int m;  ///< angular index, >= 0 (the +-m pair is stored once)
    int k;  ///< radial index, >= 1
    int kz; ///< axial index, >= 1

    friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

/// Unperturbed eigenstate. Construction re-checks the bound-state invariants.
struct BoundState {
    QuantumNumbers qn;
    double exy;    ///< in-plane energy (hartree)
    double ez;     ///< axial energy (hartree)
    double etotal; ///< exy + ez
    double kin;    ///< sqrt(2 exy)
    double kappa;  ///< sqrt(2 (V0 - exy))
    /// J_m(kin R) / (e^{kappa R} K_m(kappa R)); the exterior radial function
    /// is outside_amp * e^{kappa rho} K_m(kappa rho) * e^{-kappa (rho - R)}.
    double outside_amp;

    static BoundState make(QuantumNumbers qn, double exy, double ez, const WellGeometry& geom);
};

/// Logarithmic-derivative matching residual at rho = R in cross-multiplied
/// form, kin J'_m K_m - kappa K'_m J_m, with K_m replaced by e^{kappa R} K_m
/// (a positive factor, so zeros and signs are those of the unscaled form).
/// Continuous on (0, V0); exy outside that interval throws DomainError.
double radial_mismatch(int m, double exy, const WellGeometry& geom);

/// Dimensionless matching function in u = kin R, w = kappa R = sqrt(X^2 - u^2):
/// h(u) = u J'_m(u) - w (K'_m(w)/K_m(w)) J_m(u). Same sign as radial_mismatch,
/// finite at u = X (w = 0) where it takes its limiting value.
double matching_function(int m, double u, const WellGeometry& geom);

struct RadialOptions {
    double scan_step = 0.01;       ///< upper bound on the u-grid spacing
    double energy_tolerance = 1e-13; ///< |dE| at convergence (hartree)
};

/// All bound in-plane energies for angular index m, ascending. Empty when no
/// level is bound.
std::vector<double> solve_radial_levels(int m, const WellGeometry& geom, const RadialOptions& opts = {});

/// Number of sign changes of the matching function on the scan grid.
std::size_t count_radial_sign_changes(int m, const WellGeometry& geom, const RadialOptions& opts = {});

/// kz^2 pi^2 / (2 l^2).
double axial_energy(int kz, const WellGeometry& geom);

struct StateTable {
    std::vector<std::vector<BoundState>> per_m; ///< index = m, ascending by etotal
    std::vector<bool> complete;                  ///< false when fewer than requested exist
};

/// Lowest count_per_m (k, kz) combinations for each m <= m_max, sorted by
/// etotal with ties broken by (k, kz).
StateTable enumerate_states(const WellGeometry& geom, int m_max, int count_per_m,
                            const RadialOptions& opts = {});

/// Audit of the m > 0 eigen-equation sign. "printed" is
/// k K_m J_{m-1} - kappa J_m K_{m-1}; "derived" (from the matching condition
/// with the standard recurrences) is k K_m J_{m-1} + kappa J_m K_{m-1}. For
/// m = 0 both entries use k K_0 J_1 - kappa J_0 K_1. Residuals are normalised
/// by the sum of the magnitudes of the two products.
struct SignAudit {
    double printed_residual;
    double derived_residual;
    bool satisfies_printed;
    bool satisfies_derived;
};

SignAudit audit_eigen_equation_sign(const BoundState& state, const WellGeometry& geom);

} // namespace cylqd
