#include "cylqd/spectrum.hpp"

#include "cylqd/errors.hpp"
#include "cylqd/roots.hpp"
#include "cylqd/specfun.hpp"
#include "cylqd/units.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

namespace cylqd {

WellGeometry::WellGeometry(double radius, double height, double barrier)
    : radius_(radius), height_(height), barrier_(barrier)
{
    if (!(radius > 0.0 && std::isfinite(radius))) throw DomainError("WellGeometry: radius must be > 0");
    if (!(height > 0.0 && std::isfinite(height))) throw DomainError("WellGeometry: height must be > 0");
    if (!(barrier > 0.0 && std::isfinite(barrier))) {
        throw DomainError("WellGeometry: barrier must be finite and > 0");
    }
    strength_ = radius_ * std::sqrt(2.0 * barrier_);
}

WellGeometry WellGeometry::from_lab_units(double radius_nm, double height_nm, double barrier_ev)
{
    return {to_atomic_units({radius_nm, Unit::nm}), to_atomic_units({height_nm, Unit::nm}),
            to_atomic_units({barrier_ev, Unit::eV})};
}

namespace {

/// w K'_m(w) / K_m(w) through the ratio recurrence rho_{j+1} = 1/(rho_j + 2j/w),
/// rho_j = K_{j-1}/K_j, which never overflows. Limit at w = 0 is -m (m >= 1), 0 (m = 0).
double k_log_derivative(int m, double w)
{
    if (w == 0.0) return -static_cast<double>(m);
    const double k0 = specfun::bessel_k_scaled(0, w);
    const double k1 = specfun::bessel_k_scaled(1, w);
    if (m == 0) return -w * k1 / k0;
    double ratio = k0 / k1; // rho_1
    for (int j = 1; j < m; ++j) {
        ratio = 1.0 / (ratio + 2.0 * j / w);
    }
    return -w * ratio - m;
}

double exterior_u(double u, double strength)
{
    const double w2 = (strength - u) * (strength + u);
    return w2 > 0.0 ? std::sqrt(w2) : 0.0;
}

double start_u(int m, double step)
{
    // For m >= 1 both terms of u J_{m-1} + w (K_{m-1}/K_m) J_m are positive
    // below the first zero of J_{m-1}, which exceeds m - 1.
    return std::max(step, m >= 1 ? m - 1.0 : 0.0);
}

struct ScanGrid {
    double u0;
    double du;
    int n;
};

ScanGrid make_grid(int m, const WellGeometry& geom, const RadialOptions& opts)
{
    const double x = geom.strength();
    const double step = std::min(opts.scan_step, x / 2000.0);
    const double u0 = start_u(m, step);
    if (u0 >= x) return {u0, 0.0, 0};
    const int n = static_cast<int>(std::ceil((x - u0) / step));
    return {u0, (x - u0) / n, n};
}

void check_m(int m)
{
    if (m < 0 || m > specfun::max_order) throw DomainError("angular index m outside [0, 60]");
}

} // namespace

double matching_function(int m, double u, const WellGeometry& geom)
{
    check_m(m);
    const double x = geom.strength();
    if (!(u > 0.0 && u <= x)) throw DomainError("matching_function: u outside (0, X]");
    const double w = exterior_u(u, x);
    const specfun::JPair j = specfun::bessel_j_pair(m, u);
    return u * j.prime - k_log_derivative(m, w) * j.value;
}

double radial_mismatch(int m, double exy, const WellGeometry& geom)
{
    check_m(m);
    if (!(exy > 0.0 && exy < geom.barrier())) {
        throw DomainError("radial_mismatch: exy outside (0, V0)");
    }
    const double r = geom.radius();
    const double kin = std::sqrt(2.0 * exy);
    const double kappa = std::sqrt(2.0 * (geom.barrier() - exy));
    const specfun::JPair j = specfun::bessel_j_pair(m, kin * r);
    const specfun::KPair k = specfun::bessel_k_scaled_pair(m, kappa * r);
    return kin * j.prime * k.value - kappa * k.prime * j.value;
}

std::size_t count_radial_sign_changes(int m, const WellGeometry& geom, const RadialOptions& opts)
{
    check_m(m);
    const ScanGrid g = make_grid(m, geom, opts);
    std::size_t count = 0;
    if (g.n == 0) return 0;
    double prev = matching_function(m, g.u0, geom);
    for (int i = 1; i <= g.n; ++i) {
        const double u = i == g.n ? geom.strength() : g.u0 + i * g.du;
        const double cur = matching_function(m, u, geom);
        if (i == g.n && cur == 0.0) break; // exactly at threshold: not bound
        if ((cur < 0) != (prev < 0) && prev != 0.0) ++count;
        prev = cur;
    }
    return count;
}

std::vector<double> solve_radial_levels(int m, const WellGeometry& geom, const RadialOptions& opts)
{
    check_m(m);
    const ScanGrid g = make_grid(m, geom, opts);
    std::vector<double> levels;
    if (g.n == 0) return levels;

    const double r = geom.radius();
    const double x = geom.strength();
    auto h = [&](double u) { return matching_function(m, u, geom); };

    double u_prev = g.u0;
    double h_prev = h(u_prev);
    for (int i = 1; i <= g.n; ++i) {
        const double u = i == g.n ? x : g.u0 + i * g.du;
        const double hu = h(u);
        if (i == g.n && hu == 0.0) break;
        if ((hu < 0) != (h_prev < 0) && h_prev != 0.0) {
            // dE = u du / R^2
            const double xtol = opts.energy_tolerance * r * r / u;
            const double root = brent_root(h, u_prev, u, h_prev, hu, xtol);
            const double exy = root * root / (2.0 * r * r);
            if (exy > 0.0 && exy < geom.barrier()) levels.push_back(exy);
        }
        u_prev = u;
        h_prev = hu;
    }
    return levels;
}

double axial_energy(int kz, const WellGeometry& geom)
{
    if (kz < 1) throw DomainError("axial_energy: kz must be >= 1");
    const double l = geom.height();
    return kz * kz * std::numbers::pi * std::numbers::pi / (2.0 * l * l);
}

BoundState BoundState::make(QuantumNumbers qn, double exy, double ez, const WellGeometry& geom)
{
    if (qn.m < 0 || qn.k < 1 || qn.kz < 1) throw DomainError("BoundState: invalid quantum numbers");
    const double v0 = geom.barrier();
    if (!(exy > 0.0 && exy < v0)) throw DomainError("BoundState: exy must lie in (0, V0)");
    if (!(ez > 0.0)) throw DomainError("BoundState: ez must be > 0");

    BoundState s{};
    s.qn = qn;
    s.exy = exy;
    s.ez = ez;
    s.etotal = exy + ez;
    s.kin = std::sqrt(2.0 * exy);
    s.kappa = std::sqrt(2.0 * (v0 - exy));
    const double closure = (s.kin * s.kin + s.kappa * s.kappa) / (2.0 * v0) - 1.0;
    if (std::abs(closure) > 1e-12) throw NumericalError("BoundState: kin^2 + kappa^2 != 2 V0");

    const double r = geom.radius();
    const specfun::JPair j = specfun::bessel_j_pair(qn.m, s.kin * r);
    const specfun::KPair k = specfun::bessel_k_scaled_pair(qn.m, s.kappa * r);
    s.outside_amp = j.value / k.value;

    // Residual expressed as the implied relative error in kin R, which stays
    // meaningful when J_m(kin R) is close to a zero.
    auto residual = [&](double e) {
        const double kin = std::sqrt(2.0 * e);
        const double kap = std::sqrt(2.0 * (v0 - e));
        const specfun::JPair jj = specfun::bessel_j_pair(qn.m, kin * r);
        const specfun::KPair kk = specfun::bessel_k_scaled_pair(qn.m, kap * r);
        return kin * jj.prime * kk.value - kap * kk.prime * jj.value;
    };
    const double g = s.kin * j.prime * k.value - s.kappa * k.prime * j.value;
    const double de = 1e-7 * exy;
    const double slope = (residual(exy + de) - residual(exy - de)) / (2.0 * de);
    const double implied = std::abs(g / slope) / (2.0 * exy);
    if (!(implied <= 1e-9)) {
        throw NumericalError("BoundState: matching residual implies relative kin R error "
                             + std::to_string(implied) + ", above 1e-9");
    }
    return s;
}

StateTable enumerate_states(const WellGeometry& geom, int m_max, int count_per_m, const RadialOptions& opts)
{
    if (m_max < 0) throw DomainError("enumerate_states: m_max must be >= 0");
    if (count_per_m < 1) throw DomainError("enumerate_states: count_per_m must be >= 1");

    StateTable table;
    const auto count = static_cast<std::size_t>(count_per_m);
    for (int m = 0; m <= m_max; ++m) {
        const std::vector<double> radial = solve_radial_levels(m, geom, opts);
        struct Candidate {
            double e;
            int k;
            int kz;
        };
        std::vector<Candidate> cand;
        auto by_energy = [](const Candidate& a, const Candidate& b) {
            return std::tie(a.e, a.k, a.kz) < std::tie(b.e, b.k, b.kz);
        };
        for (std::size_t ik = 0; ik < radial.size(); ++ik) {
            for (int kz = 1;; ++kz) {
                const double e = radial[ik] + axial_energy(kz, geom);
                // cand holds the current best `count`; nothing above its
                // largest entry can enter, and energies grow with kz.
                if (cand.size() >= count && e > cand.back().e) break;
                cand.push_back({e, static_cast<int>(ik) + 1, kz});
                std::sort(cand.begin(), cand.end(), by_energy);
                if (cand.size() > count) cand.pop_back();
            }
        }
        std::vector<BoundState> states;
        states.reserve(cand.size());
        for (const Candidate& c : cand) {
            states.push_back(BoundState::make({m, c.k, c.kz}, radial[c.k - 1], axial_energy(c.kz, geom), geom));
        }
        table.complete.push_back(states.size() == count);
        table.per_m.push_back(std::move(states));
    }
    return table;
}

SignAudit audit_eigen_equation_sign(const BoundState& state, const WellGeometry& geom)
{
    const int m = state.qn.m;
    const double r = geom.radius();
    const double u = state.kin * r;
    const double w = state.kappa * r;
    double a;
    double b;
    if (m == 0) {
        a = state.kin * specfun::bessel_k_scaled(0, w) * specfun::bessel_j(1, u);
        b = state.kappa * specfun::bessel_j(0, u) * specfun::bessel_k_scaled(1, w);
        const double res = (a - b) / (std::abs(a) + std::abs(b));
        const bool ok = std::abs(res) < 1e-8;
        return {res, res, ok, ok};
    }
    a = state.kin * specfun::bessel_k_scaled(m, w) * specfun::bessel_j(m - 1, u);
    b = state.kappa * specfun::bessel_j(m, u) * specfun::bessel_k_scaled(m - 1, w);
    const double denom = std::abs(a) + std::abs(b);
    const double printed = (a - b) / denom;
    const double derived = (a + b) / denom;
    return {printed, derived, std::abs(printed) < 1e-8, std::abs(derived) < 1e-8};
}

} // namespace cylqd
