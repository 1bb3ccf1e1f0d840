#include "cylqd/app.hpp"

#include "cylqd/errors.hpp"
#include "cylqd/oracle/fd_radial.hpp"
#include "cylqd/oracle/functional.hpp"
#include "cylqd/oracle/highprec.hpp"
#include "detail.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

namespace cylqd::app {

using nlohmann::ordered_json;
using detail::strf;

bool ValidationReport::passed() const
{
    return !checks.empty()
           && std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

std::string ValidationReport::json() const
{
    ordered_json j = ordered_json::object();
    j["passed"] = passed();
    ordered_json arr = ordered_json::array();
    for (const ValidationCheck& c : checks) {
        arr.push_back({{"name", c.name},
                       {"passed", c.passed},
                       {"measured", c.measured},
                       {"tolerance", c.tolerance},
                       {"detail", c.detail}});
    }
    j["checks"] = std::move(arr);
    return j.dump(2) + "\n";
}

namespace {

double rel(double a, double b)
{
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

/// Runs one check; any exception becomes a failed check carrying the message.
void run_check(ValidationReport& report, const std::string& name, double tolerance,
               const std::function<ValidationCheck()>& body)
{
    try {
        ValidationCheck c = body();
        c.name = name;
        c.tolerance = tolerance;
        report.checks.push_back(std::move(c));
    } catch (const std::exception& e) {
        report.checks.push_back({name, false, std::nan(""), tolerance, std::string("error: ") + e.what()});
    }
}

} // namespace

ValidationReport run_validation(const RunConfig& cfg, const ValidateOptions& opts)
{
    cfg.validate();
    ValidationReport report;
    const WellGeometry geom = cfg.geometry();
    const FieldSpec field = cfg.field();

    run_check(report, "constants", 1e-14, [&] {
        const ConstantsCheck c = check_constants(opts.constants != nullptr ? *opts.constants : codata2018());
        return ValidationCheck{{}, c.ok, c.worst_roundtrip, 0.0,
                               strf("CODATA identities %.2e (tolerance 1e-9)", c.worst_identity)};
    });

    run_check(report, "specfun_vs_highprec", 1e-12, [&] {
        const auto c = oracle::certify_specfun(opts.specfun_points);
        return ValidationCheck{{}, c.failures == 0, std::max(c.worst_j, c.worst_k), 0.0,
                               strf("%d points, %d failures, worst J %.2e, worst K %.2e; largest: %s", c.points,
                                    c.failures, c.worst_j, c.worst_k, c.worst_case.c_str())};
    });

    run_check(report, "solver_vs_fd", 5e-4, [&] {
        double worst = 0.0;
        bool counts_ok = true;
        std::string detail;
        for (int m = 0; m <= cfg.m_max; ++m) {
            const auto levels = solve_radial_levels(m, geom);
            oracle::FdGrid grid = oracle::default_fd_grid(m, geom);
            if (opts.fd_points) grid.n_points = *opts.fd_points;
            const auto fd = oracle::fd_radial_spectrum(m, geom, grid);
            counts_ok = counts_ok && fd.levels.size() == levels.size();
            for (std::size_t i = 0; i < std::min(levels.size(), fd.levels.size()); ++i) {
                worst = std::max(worst, rel(levels[i], fd.levels[i].energy));
            }
            detail += strf("m=%d: %zu solver / %zu fd levels; ", m, levels.size(), fd.levels.size());
        }
        return ValidationCheck{{}, counts_ok && worst <= 5e-4, worst, 0.0, detail};
    });

    const StateTable table = enumerate_states(geom, cfg.m_max, cfg.levels_per_m);
    std::vector<BoundState> states;
    for (const auto& group : table.per_m) states.insert(states.end(), group.begin(), group.end());

    run_check(report, "moments_convergence", 1e-9, [&] {
        double worst = 0.0;
        double worst_norm = 0.0;
        std::map<std::pair<int, int>, bool> seen;
        for (const BoundState& s : states) {
            if (seen[{s.qn.m, s.qn.k}]) continue;
            seen[{s.qn.m, s.qn.k}] = true;
            MomentOptions fine;
            fine.gl_order = 2 * fine.gl_order;
            const RadialMoments a = radial_moments(s, geom);
            const RadialMoments b = radial_moments(s, geom, fine);
            worst = std::max({worst, rel(a.rho2_mean, b.rho2_mean), rel(a.norm, b.norm)});
            worst_norm = std::max(worst_norm, std::abs(a.norm_residual));
        }
        return ValidationCheck{{}, worst < 1e-9 && worst_norm <= 1e-10, worst, 0.0,
                               strf("doubled order change %.2e, worst Lommel residual %.2e over %zu radial states",
                                    worst, worst_norm, seen.size())};
    });

    run_check(report, "axial_closed_vs_quadrature", 1e-10, [&] {
        double worst = 0.0;
        for (const BoundState& s : states) {
            const AxialMoments a = axial_moments(s.qn.kz, geom.height());
            const AxialMoments q = axial_moments_quadrature(s.qn.kz, geom.height());
            worst = std::max({worst, rel(q.z_mean, a.z_mean), rel(q.z2_mean, a.z2_mean), rel(q.var_z, a.var_z)});
        }
        return ValidationCheck{{}, worst <= 1e-10, worst, 0.0, strf("%zu states", states.size())};
    });

    run_check(report, "moments_vs_dense_quadrature", 1e-8, [&] {
        double worst = 0.0;
        for (int m = 0; m <= cfg.m_max && m < static_cast<int>(table.per_m.size()); ++m) {
            if (table.per_m[m].empty()) continue;
            const BoundState& s = table.per_m[m].front();
            const RadialMoments a = radial_moments(s, geom);
            const oracle::DenseMoments d = oracle::quadrature_crosscheck(s, geom);
            worst = std::max(worst, rel(d.rho2_mean, a.rho2_mean));
        }
        return ValidationCheck{{}, worst <= 1e-8, worst, 0.0, "lowest state of each m, composite Simpson"};
    });

    run_check(report, "closed_form_vs_numeric_minimum", 1e-8, [&] {
        double worst_j = 0.0;
        double worst_param = 0.0;
        bool ordering = true;
        const double h = std::max(field.magnitude(), 1e-300);
        for (const BoundState& s : states) {
            const MomentSet ms = compute_moments(s, geom, cfg.parity);
            const MagneticCorrection c = circular_correction(ms, field);
            const MagneticCorrection e = elliptic_correction(ms, field);
            const oracle::FunctionalQuadrature quad(s, geom, cfg.parity);
            const auto nc = oracle::numeric_minimize(quad, field, GaugeKind::circular);
            const auto ne = oracle::numeric_minimize(quad, field, GaugeKind::elliptic);
            const double scale = std::max(c.e_h2, 1e-300);
            worst_j = std::max({worst_j, std::abs(nc.j_min - c.e_h2) / scale, std::abs(ne.j_min - e.e_h2) / scale});
            worst_param = std::max({worst_param, std::abs(nc.params.mu - c.params_opt.mu) / (h * geom.height()),
                                    std::abs(ne.params.mu - e.params_opt.mu) / (h * geom.height()),
                                    std::abs(ne.params.lambda - e.params_opt.lambda) / h});
            ordering = ordering && e.e_h2 <= c.e_h2 && c.e_h2 <= functional_j(ms, field, {GaugeKind::circular, 0.0, 0.0});
        }
        return ValidationCheck{{}, worst_j <= 1e-8 && worst_param <= 1e-6 && ordering, worst_j, 0.0,
                               strf("%zu states; worst scaled parameter error %.2e; variational ordering %s",
                                    states.size(), worst_param, ordering ? "holds" : "VIOLATED")};
    });

    return report;
}

CommandResult cmd_validate(const RunConfig& cfg, const ValidateOptions& opts)
{
    const ValidationReport report = run_validation(cfg, opts);
    const auto dir = cfg.output_path();
    std::filesystem::create_directories(dir);
    CommandResult out{report.passed() ? exit_ok : exit_validation, {dir / "validate.json"}, {}};
    detail::write_text(out.written[0], report.json());
    for (const ValidationCheck& c : report.checks) {
        out.summary += strf("[%s] %-32s measured %.3e (tol %.0e)  %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                            c.measured, c.tolerance, c.detail.c_str());
    }
    out.written.push_back(detail::write_run_metadata(dir, "validate", config_to_json(cfg), out.written));
    return out;
}

} // namespace cylqd::app
