#include "cylqd/app.hpp"

#include "cylqd/errors.hpp"
#include "detail.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cylqd::app {

using detail::round4;
using detail::strf;

namespace {

std::optional<ExponentFit> fit_exponent(const std::vector<SweepRow>& rows, std::size_t states, bool elliptic)
{
    std::vector<double> slopes;
    for (std::size_t s = 0; s < states; ++s) {
        double sx = 0.0;
        double sy = 0.0;
        double sxx = 0.0;
        double sxy = 0.0;
        int n = 0;
        for (std::size_t i = s; i < rows.size(); i += states) {
            const double shift = elliptic ? rows[i].shift2 : rows[i].shift1;
            if (!(rows[i].axis_value > 0.0) || !(shift > 0.0)) continue;
            const double x = std::log(rows[i].axis_value);
            const double y = std::log(shift);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++n;
        }
        const double den = n * sxx - sx * sx;
        if (n < 2 || !(den > 0.0)) continue;
        slopes.push_back((n * sxy - sx * sy) / den);
    }
    if (slopes.empty()) return std::nullopt;
    double mean = 0.0;
    for (double s : slopes) mean += s;
    mean /= static_cast<double>(slopes.size());
    double dev = 0.0;
    for (double s : slopes) dev = std::max(dev, std::abs(s - mean));
    return ExponentFit{mean, dev, static_cast<int>(slopes.size())};
}

void set_axis(RunConfig& cfg, const std::string& parameter, double v)
{
    if (parameter == "field_kOe") cfg.field_kOe = v;
    else if (parameter == "radius_nm") cfg.radius_nm = v;
    else if (parameter == "height_nm") cfg.height_nm = v;
    else if (parameter == "barrier_eV") cfg.barrier_eV = v;
    else throw ConfigError("unknown sweep parameter '" + parameter + "'");
}

} // namespace

SweepResult run_sweep(const RunConfig& cfg)
{
    cfg.validate();
    if (!cfg.sweep) throw ConfigError("sweep command needs a 'sweep' descriptor (parameter, start, stop, steps)");
    const SweepAxis& axis = *cfg.sweep;
    SweepResult out{cfg, {}, std::nullopt, std::nullopt, {}};

    if (axis.parameter == "field_kOe") {
        // Field only enters through the closed forms; states and moments are computed once.
        RunConfig base = cfg;
        base.field_kOe = 0.0;
        const SolveResult r = solve(base);
        for (double h : axis.values()) {
            const FieldSpec field = FieldSpec::from_kOe(h);
            for (const CorrectedLevel& lv : r.levels) {
                const double s1 = circular_correction(lv.moments, field).e_h2;
                const double s2 = elliptic_correction(lv.moments, field).e_h2;
                out.rows.push_back({h, lv.state.qn.m, lv.state.qn.k, lv.state.qn.kz, lv.e_mev,
                                    energy_to_mev(lv.state.etotal + s1), energy_to_mev(lv.state.etotal + s2), s1,
                                    s2});
            }
        }
        out.circular_exponent = fit_exponent(out.rows, r.levels.size(), false);
        out.elliptic_exponent = fit_exponent(out.rows, r.levels.size(), true);
    } else {
        for (double v : axis.values()) {
            RunConfig point = cfg;
            point.sweep.reset();
            set_axis(point, axis.parameter, v);
            const SolveResult r = solve(point);
            for (const CorrectedLevel& lv : r.levels) {
                out.rows.push_back({v, lv.state.qn.m, lv.state.qn.k, lv.state.qn.kz, lv.e_mev, lv.e1_mev, lv.e2_mev,
                                    lv.circular.e_h2, lv.elliptic.e_h2});
            }
        }
    }

    std::ostringstream os;
    os << "# cylqd sweep over " << axis.parameter << " (energies in meV)\n";
    os << strf("# constants_fingerprint = %016llx\n", static_cast<unsigned long long>(codata2018().fingerprint()));
    os << "# parity = " << parity_tag(cfg.parity) << '\n';
    if (out.circular_exponent) {
        os << strf("# fitted_exponent_E1 = %.6f (max state deviation %.2e, %d states)\n", out.circular_exponent->mean,
                   out.circular_exponent->max_deviation, out.circular_exponent->states);
    }
    if (out.elliptic_exponent) {
        os << strf("# fitted_exponent_E2 = %.6f (max state deviation %.2e, %d states)\n", out.elliptic_exponent->mean,
                   out.elliptic_exponent->max_deviation, out.elliptic_exponent->states);
    }
    os << axis.parameter << ",m,k,kz,E_meV,E1_meV,E2_meV\n";
    for (const SweepRow& row : out.rows) {
        os << strf("%.17g,%d,%d,%d,%.4f,%.4f,%.4f\n", row.axis_value, row.m, row.k, row.kz, round4(row.e_mev),
                   round4(row.e1_mev), round4(row.e2_mev));
    }
    out.csv = os.str();
    return out;
}

CommandResult cmd_sweep(const RunConfig& cfg)
{
    const SweepResult r = run_sweep(cfg);
    const auto dir = cfg.output_path();
    std::filesystem::create_directories(dir);
    CommandResult out{exit_ok, {dir / "sweep.csv"}, {}};
    detail::write_text(out.written[0], r.csv);
    out.summary = strf("%zu rows over %d %s values\n", r.rows.size(), cfg.sweep->steps, cfg.sweep->parameter.c_str());
    if (r.circular_exponent) {
        out.summary += strf("fitted exponent of E1 - E vs H: %.6f\n", r.circular_exponent->mean);
    }
    if (r.elliptic_exponent) {
        out.summary += strf("fitted exponent of E2 - E vs H: %.6f\n", r.elliptic_exponent->mean);
    }
    out.written.push_back(detail::write_run_metadata(dir, "sweep", config_to_json(cfg), out.written));
    return out;
}

} // namespace cylqd::app
