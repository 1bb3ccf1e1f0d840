#include "cylqd/oracle/functional.hpp"

#include "cylqd/errors.hpp"
#include "cylqd/units.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cylqd::oracle {

namespace {

struct Rule {
    std::vector<double> x;
    std::vector<double> w;
};

// Tanh-sinh on [a, b] with step 2^-level, truncated where weights drop below 1e-20.
Rule tanh_sinh(double a, double b, int level)
{
    Rule r;
    const double step = std::ldexp(1.0, -level);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const double hpi = 0.5 * std::numbers::pi;
    for (int k = -static_cast<int>(4.0 / step); k <= static_cast<int>(4.0 / step); ++k) {
        const double t = k * step;
        const double s = hpi * std::sinh(t);
        const double c = std::cosh(s);
        const double w = step * hpi * std::cosh(t) / (c * c) * half;
        if (w < 1e-20 * half) continue;
        const double x = mid + half * std::tanh(s);
        if (x <= a || x >= b) continue;
        r.x.push_back(x);
        r.w.push_back(w);
    }
    return r;
}

double golden_then_parabola(const auto& f, double lo, double hi, int& evals)
{
    constexpr double inv_phi = 0.6180339887498949;
    if (hi - lo <= 0.0) return lo;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    evals += 2;
    const double width0 = hi - lo;
    while (b - a > 1e-4 * width0) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        ++evals;
    }
    // Parabolic polish on a shrinking symmetric stencil.
    double x0 = 0.5 * (a + b);
    double s = b - a;
    for (int i = 0; i < 3; ++i) {
        const double fm = f(x0 - s);
        const double f0 = f(x0);
        const double fp = f(x0 + s);
        evals += 3;
        const double curv = fp - 2.0 * f0 + fm;
        if (!(curv > 0.0)) break;
        const double step = -0.5 * s * (fp - fm) / curv;
        if (std::abs(step) > 2.0 * s) break;
        x0 += step;
        s *= 0.1;
    }
    return x0;
}

} // namespace

FunctionalQuadrature::FunctionalQuadrature(const BoundState& state, const WellGeometry& geom,
                                           AngularParity parity, int level)
    : x2_factor_(x2_factor(state.qn.m, parity)), height_(geom.height())
{
    const DensityModel density(state, geom);
    const double r = geom.radius();
    const double l = geom.height();
    const Rule inner = tanh_sinh(0.0, r, level);
    const Rule outer = tanh_sinh(r, density.rho_max(), level);
    const Rule axial = tanh_sinh(0.0, l, level);

    // p(rho, z) = f(rho)^2 s(z)^2 / (2 pi N); both factors normalised here
    // from the quadrature itself, so the check is independent of the moments code.
    auto add_rho = [&](const Rule& rule) {
        for (std::size_t i = 0; i < rule.x.size(); ++i) {
            const double f = density.radial(rule.x[i]);
            rho_.push_back(rule.x[i]);
            rho_w_.push_back(rule.w[i] * rule.x[i] * f * f);
        }
    };
    add_rho(inner);
    add_rho(outer);
    const double kzpi = state.qn.kz * std::numbers::pi / l;
    for (std::size_t j = 0; j < axial.x.size(); ++j) {
        const double s = std::sin(kzpi * axial.x[j]);
        z_.push_back(axial.x[j]);
        z_w_.push_back(axial.w[j] * (2.0 / l) * s * s);
    }
    radial_norm_ = 0.0;
    for (double w : rho_w_) radial_norm_ += w;
    for (double& w : rho_w_) w /= radial_norm_;

    double sz = 0.0;
    for (double w : z_w_) sz += w;
    norm_ = sz;
    for (double& w : z_w_) w /= sz;
}

double FunctionalQuadrature::operator()(const FieldSpec& field, double lambda, double mu) const
{
    const double h = field.magnitude();
    const double a = 0.5 * h + lambda;
    const double b = lambda - 0.5 * h;
    double total = 0.0;
    for (std::size_t j = 0; j < z_.size(); ++j) {
        const double ax = a * z_[j] + mu;
        double row = 0.0;
        for (std::size_t i = 0; i < rho_.size(); ++i) {
            // <x^2> at fixed rho is x2_factor * rho^2 after the phi integral
            row += rho_w_[i] * (ax * ax + b * b * x2_factor_ * rho_[i] * rho_[i]);
        }
        total += z_w_[j] * row;
    }
    const double c = codata2018().c_au;
    return total / (2.0 * c * c);
}

double FunctionalQuadrature::rho2_mean() const
{
    double s = 0.0;
    for (std::size_t i = 0; i < rho_.size(); ++i) s += rho_w_[i] * rho_[i] * rho_[i];
    return s;
}

double numeric_functional(const BoundState& state, const WellGeometry& geom, const FieldSpec& field,
                          const GaugeFamily& gauge, AngularParity parity)
{
    const FunctionalQuadrature quad(state, geom, parity);
    return quad(field, gauge.effective_lambda(), gauge.mu);
}

NumericMinimum numeric_minimize(const FunctionalQuadrature& quad, const FieldSpec& field, GaugeKind kind)
{
    const double h = field.magnitude();
    const double l = quad.height();
    int evals = 0;
    if (h == 0.0) {
        return {{kind, 0.0, 0.0}, quad(field, 0.0, 0.0), 0};
    }

    auto best_mu = [&](double lambda) {
        const double reach = std::abs(0.5 * h + lambda) * l * 1.01 + 1e-300;
        return golden_then_parabola([&](double mu) { return quad(field, lambda, mu); }, -reach, reach, evals);
    };

    if (kind == GaugeKind::circular) {
        const double mu = best_mu(0.0);
        return {{kind, 0.0, mu}, quad(field, 0.0, mu), 1};
    }

    // Start from a coordinate sweep, then Newton steps with a central-difference
    // gradient and Hessian. The stencil is wide (percent of the bracket) so
    // the differences are not swamped by rounding in J.
    double lambda = golden_then_parabola([&](double lam) { return quad(field, lam, 0.0); }, -h, h, evals);
    double mu = best_mu(lambda);
    const double dl = 0.01 * h;
    const double dm = 0.01 * h * l;
    constexpr int max_sweeps = 50;
    for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
        auto j = [&](double x, double y) {
            ++evals;
            return quad(field, x, y);
        };
        const double f0 = j(lambda, mu);
        const double fpl = j(lambda + dl, mu);
        const double fml = j(lambda - dl, mu);
        const double fpm = j(lambda, mu + dm);
        const double fmm = j(lambda, mu - dm);
        const double fpp = j(lambda + dl, mu + dm);
        const double fpn = j(lambda + dl, mu - dm);
        const double fnp = j(lambda - dl, mu + dm);
        const double fnn = j(lambda - dl, mu - dm);
        const double gl = (fpl - fml) / (2.0 * dl);
        const double gm = (fpm - fmm) / (2.0 * dm);
        const double hll = (fpl - 2.0 * f0 + fml) / (dl * dl);
        const double hmm = (fpm - 2.0 * f0 + fmm) / (dm * dm);
        const double hlm = (fpp - fpn - fnp + fnn) / (4.0 * dl * dm);
        const double det = hll * hmm - hlm * hlm;
        if (!(hll > 0.0) || !(det > 0.0)) {
            throw NumericalError("numeric_minimize: functional is not convex at lambda " + std::to_string(lambda)
                                 + ", mu " + std::to_string(mu));
        }
        const double step_l = -(hmm * gl - hlm * gm) / det;
        const double step_m = -(hll * gm - hlm * gl) / det;
        lambda += step_l;
        mu += step_m;
        if (std::abs(step_l) <= 1e-12 * h && std::abs(step_m) <= 1e-12 * h * l) {
            return {{kind, lambda, mu}, quad(field, lambda, mu), sweep};
        }
    }
    throw NumericalError("numeric_minimize: elliptic descent did not converge in " + std::to_string(max_sweeps)
                         + " Newton steps (last lambda " + std::to_string(lambda) + ", mu " + std::to_string(mu)
                         + ", evaluations " + std::to_string(evals) + ")");
}

NumericMinimum numeric_minimize(const BoundState& state, const WellGeometry& geom, const FieldSpec& field,
                                GaugeKind kind, AngularParity parity)
{
    const FunctionalQuadrature quad(state, geom, parity);
    return numeric_minimize(quad, field, kind);
}

DenseMoments quadrature_crosscheck(const BoundState& state, const WellGeometry& geom, int intervals)
{
    if (intervals < 2) throw DomainError("quadrature_crosscheck: need at least 2 intervals");
    const int n = intervals + intervals % 2;
    const DensityModel model(state, geom);
    const double r = geom.radius();

    auto simpson = [&](double a, double b, int power) {
        const double h = (b - a) / n;
        double s = 0.0;
        for (int i = 0; i <= n; ++i) {
            const double rho = a + i * h;
            const double f = model.radial(rho);
            const double weight = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            s += weight * f * f * std::pow(rho, power);
        }
        return s * h / 3.0;
    };
    const double n1 = simpson(0.0, r, 1) + simpson(r, model.rho_max(), 1);
    const double n3 = simpson(0.0, r, 3) + simpson(r, model.rho_max(), 3);
    return {n1, n3 / n1};
}

} // namespace cylqd::oracle
