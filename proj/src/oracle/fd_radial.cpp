#include "cylqd/oracle/fd_radial.hpp"

#include "cylqd/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cylqd::oracle {

namespace {

struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> off; ///< off[i] couples i and i+1
};

Tridiagonal assemble(int m, const WellGeometry& geom, double h, int cells)
{
    Tridiagonal t;
    t.diag.resize(cells);
    t.off.resize(cells > 0 ? cells - 1 : 0);
    const double r = geom.radius();
    const double inv2h2 = 0.5 / (h * h);
    for (int i = 0; i < cells; ++i) {
        const double rho = (i + 0.5) * h;
        const double face_in = i * h;
        const double face_out = (i + 1) * h;
        const double v = rho < r ? 0.0 : geom.barrier();
        t.diag[i] = inv2h2 * (face_in + face_out) / rho + v + 0.5 * m * m / (rho * rho);
        if (i + 1 < cells) {
            const double rho_next = rho + h;
            t.off[i] = -inv2h2 * face_out / std::sqrt(rho * rho_next);
        }
    }
    return t;
}

/// Number of eigenvalues strictly below x (Sturm sequence / LDL^T inertia).
int count_below(const Tridiagonal& t, double x)
{
    int count = 0;
    double q = t.diag[0] - x;
    if (q < 0) ++count;
    for (std::size_t i = 1; i < t.diag.size(); ++i) {
        if (q == 0.0) q = 1e-300;
        q = t.diag[i] - x - t.off[i - 1] * t.off[i - 1] / q;
        if (q < 0) ++count;
    }
    return count;
}

double gershgorin_lower(const Tridiagonal& t)
{
    double lo = t.diag[0] - (t.off.empty() ? 0.0 : std::abs(t.off[0]));
    for (std::size_t i = 1; i < t.diag.size(); ++i) {
        const double right = i < t.off.size() ? std::abs(t.off[i]) : 0.0;
        lo = std::min(lo, t.diag[i] - std::abs(t.off[i - 1]) - right);
    }
    return lo;
}

std::vector<double> eigenvalues_below(const Tridiagonal& t, double upper)
{
    const int n = count_below(t, upper);
    std::vector<double> out;
    out.reserve(n);
    const double lower = gershgorin_lower(t);
    for (int idx = 0; idx < n; ++idx) {
        double lo = out.empty() ? lower : out.back();
        double hi = upper;
        // eigenvalue idx is the smallest x with count_below(x) > idx
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (count_below(t, mid) > idx) {
                hi = mid;
            } else {
                lo = mid;
            }
            if (hi - lo <= 1e-15 * std::abs(hi)) break;
        }
        out.push_back(0.5 * (lo + hi));
    }
    return out;
}

} // namespace

std::vector<double> fd_eigenvalues(int m, const WellGeometry& geom, int cells_inside, double rho_max, double upper)
{
    if (cells_inside < 1) throw DomainError("fd_eigenvalues: cells_inside must be >= 1");
    const double h = geom.radius() / cells_inside;
    const int cells = static_cast<int>(std::ceil(rho_max / h - 1e-9));
    return eigenvalues_below(assemble(m, geom, h, cells), upper);
}

FdSpectrum fd_radial_spectrum(int m, const WellGeometry& geom, const FdGrid& grid)
{
    if (m < 0) throw DomainError("fd_radial_spectrum: m must be >= 0");
    if (grid.n_points < 500) {
        throw ResolutionError("fd_radial_spectrum: n_points = " + std::to_string(grid.n_points)
                              + " is below the 500-point floor");
    }
    if (!(grid.rho_max > geom.radius())) throw ResolutionError("fd_radial_spectrum: rho_max must exceed R");

    const double h0 = grid.rho_max / (grid.n_points + 1);
    const int inside = std::max(1, static_cast<int>(std::lround(geom.radius() / h0)));
    const double v0 = geom.barrier();

    const std::vector<double> coarse = fd_eigenvalues(m, geom, inside, grid.rho_max, v0);
    const std::vector<double> fine = fd_eigenvalues(m, geom, 2 * inside, grid.rho_max, v0);
    if (coarse.size() != fine.size()) {
        throw ResolutionError("fd_radial_spectrum: level count " + std::to_string(coarse.size()) + " at h vs "
                              + std::to_string(fine.size()) + " at h/2");
    }

    FdSpectrum out;
    out.spacing = geom.radius() / inside;
    out.cells = static_cast<int>(std::ceil(grid.rho_max / out.spacing - 1e-9));
    for (std::size_t i = 0; i < fine.size(); ++i) {
        const double rich = (4.0 * fine[i] - coarse[i]) / 3.0;
        out.levels.push_back({rich, coarse[i], fine[i], std::abs(rich - fine[i])});
    }
    if (!out.levels.empty()) {
        const double kappa_min = std::sqrt(2.0 * (v0 - out.levels.back().energy));
        if (grid.rho_max < geom.radius() + 40.0 / kappa_min * (1.0 - 1e-9)) {
            throw ResolutionError("fd_radial_spectrum: rho_max below R + 40/kappa_min");
        }
    }
    return out;
}

FdGrid default_fd_grid(int m, const WellGeometry& geom, int cells_inside)
{
    const double r = geom.radius();
    // Pilot run in a wide box to locate the least-bound level.
    const double pilot_box = r + std::max(40.0 * r, 400.0 / std::sqrt(2.0 * geom.barrier()));
    const std::vector<double> pilot = fd_eigenvalues(m, geom, 200, pilot_box, geom.barrier());
    double rho_max = r + 40.0 / std::sqrt(2.0 * geom.barrier());
    if (!pilot.empty()) {
        const double kappa = std::sqrt(2.0 * (geom.barrier() - pilot.back()));
        rho_max = r + 40.0 / (0.9 * kappa);
    }
    const double h = r / cells_inside;
    const int n_points = std::max(500, static_cast<int>(std::ceil(rho_max / h)) - 1);
    return {n_points, rho_max};
}

} // namespace cylqd::oracle
