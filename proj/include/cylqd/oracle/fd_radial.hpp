#pragma once

#include "cylqd/spectrum.hpp"

#include <vector>

namespace cylqd::oracle {

/// Radial finite-difference grid. The spacing is adjusted so that R falls on
/// a cell face: h = R / round(R / h0) with h0 = rho_max / (n_points + 1).
struct FdGrid {
    int n_points;   ///< cells on the coarse grid, >= 500
    double rho_max; ///< Dirichlet wall (bohr)
};

struct FdLevel {
    double energy;          ///< Richardson value (hartree)
    double coarse;          ///< spacing h
    double fine;            ///< spacing h/2
    double error_estimate;  ///< |energy - fine|
};

struct FdSpectrum {
    std::vector<FdLevel> levels; ///< ascending, all below V0
    double spacing;              ///< coarse h actually used
    int cells;                   ///< coarse cell count
};

/// Bound levels of -(1/2rho)(rho phi')' + [V + m^2/(2 rho^2)] phi = E phi by a
/// cell-centred flux discretisation symmetrised with u_i = sqrt(rho_i) phi_i,
/// Sturm-sequence bisection on the tridiagonal matrix, and Richardson
/// extrapolation from h and h/2. Uses no Bessel functions.
///
/// Throws ResolutionError when n_points < 500, when the level count differs
/// between h and h/2, or when rho_max is short of R + 40/kappa_min.
FdSpectrum fd_radial_spectrum(int m, const WellGeometry& geom, const FdGrid& grid);

/// Grid satisfying the FdGrid invariants for this m, with about
/// `cells_inside` coarse cells across the well radius.
FdGrid default_fd_grid(int m, const WellGeometry& geom, int cells_inside = 1000);

/// Eigenvalues below `upper` of a single discretisation with `cells_inside`
/// cells across R (exposed for convergence tests).
std::vector<double> fd_eigenvalues(int m, const WellGeometry& geom, int cells_inside, double rho_max, double upper);

} // namespace cylqd::oracle
