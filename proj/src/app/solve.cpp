#include "cylqd/app.hpp"

#include "cylqd/errors.hpp"
#include "detail.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

namespace cylqd::app {

using nlohmann::ordered_json;
using detail::round4;
using detail::strf;

namespace {

constexpr const char* csv_columns = "m,k,kz,E_xy_meV,E_z_meV,E_meV,E1_meV,E2_meV,parity,flags";

std::string level_flags(const CorrectedLevel& lv, const WellGeometry& geom, const FieldSpec& field, bool complete)
{
    std::vector<std::string> tags;
    const SignAudit audit = audit_eigen_equation_sign(lv.state, geom);
    if (lv.state.qn.m == 0) tags.emplace_back(audit.satisfies_derived ? "sign=both" : "sign=neither");
    else if (audit.satisfies_derived && audit.satisfies_printed) tags.emplace_back("sign=both");
    else if (audit.satisfies_derived) tags.emplace_back("sign=derived");
    else if (audit.satisfies_printed) tags.emplace_back("sign=printed");
    else tags.emplace_back("sign=neither");
    if (field.beyond_weak_regime()) tags.emplace_back("strong_field");
    if (!complete) tags.emplace_back("incomplete_m");
    std::string out;
    for (const auto& t : tags) {
        if (!out.empty()) out += '|';
        out += t;
    }
    return out;
}

SpectrumRow make_row(const CorrectedLevel& lv, AngularParity parity, std::string flags)
{
    SpectrumRow row{lv.state.qn.m,
                    lv.state.qn.k,
                    lv.state.qn.kz,
                    round4(energy_to_mev(lv.state.exy)),
                    round4(energy_to_mev(lv.state.ez)),
                    round4(lv.e_mev),
                    round4(lv.e1_mev),
                    round4(lv.e2_mev),
                    parity,
                    std::move(flags)};
    if (std::abs(row.e_mev - (row.e_xy_mev + row.e_z_mev)) > 1.5e-4) {
        throw NumericalError(strf("row (%d,%d,%d): E_meV differs from E_xy_meV + E_z_meV beyond rounding", row.m,
                                  row.k, row.kz));
    }
    if (lv.elliptic.e_h2 > lv.circular.e_h2) {
        throw NumericalError(strf("row (%d,%d,%d): elliptic correction exceeds circular", row.m, row.k, row.kz));
    }
    return row;
}

} // namespace

SolveResult solve(const RunConfig& cfg)
{
    cfg.validate();
    const WellGeometry geom = cfg.geometry();
    const FieldSpec field = cfg.field();
    const StateTable table = enumerate_states(geom, cfg.m_max, cfg.levels_per_m);

    SolveResult out{cfg, {}, {}, table.complete, 0.0};
    for (std::size_t m = 0; m < table.per_m.size(); ++m) {
        const auto levels = corrected_spectrum(table.per_m[m], geom, field, cfg.parity);
        for (const CorrectedLevel& lv : levels) {
            out.max_truncation_bound = std::max(out.max_truncation_bound, lv.moments.truncation_bound);
            out.rows.push_back(make_row(lv, cfg.parity, level_flags(lv, geom, field, table.complete[m])));
            out.levels.push_back(lv);
        }
    }
    return out;
}

namespace {

std::vector<std::pair<std::string, std::string>> metadata(const SolveResult& r)
{
    const PhysicalConstants& c = codata2018();
    const RadialOptions ropt;
    const MomentOptions mopt;
    return {
        {"constants", "CODATA 2018"},
        {"constants_fingerprint", strf("%016llx", static_cast<unsigned long long>(c.fingerprint()))},
        {"radius_nm", strf("%.17g", r.config.radius_nm)},
        {"height_nm", strf("%.17g", r.config.height_nm)},
        {"barrier_eV", strf("%.17g", r.config.barrier_eV)},
        {"field_kOe", strf("%.17g", r.config.field_kOe)},
        {"parity", std::string(parity_tag(r.config.parity))},
        {"energy_tolerance_hartree", strf("%.3g", ropt.energy_tolerance)},
        {"scan_step", strf("%.3g", ropt.scan_step)},
        {"moment_rel_tol", strf("%.3g", mopt.rel_tol)},
        {"tail_decay_lengths", strf("%.3g", mopt.tail_decay_lengths)},
        {"max_truncation_bound", strf("%.3e", r.max_truncation_bound)},
    };
}

} // namespace

std::string spectrum_csv(const SolveResult& r)
{
    std::ostringstream os;
    os << "# cylqd spectrum (energies in meV)\n";
    for (const auto& [k, v] : metadata(r)) os << "# " << k << " = " << v << '\n';
    os << csv_columns << '\n';
    for (const SpectrumRow& row : r.rows) {
        os << strf("%d,%d,%d,%.4f,%.4f,%.4f,%.4f,%.4f,", row.m, row.k, row.kz, row.e_xy_mev, row.e_z_mev, row.e_mev,
                   row.e1_mev, row.e2_mev)
           << parity_tag(row.parity) << ',' << row.flags << '\n';
    }
    return os.str();
}

std::string spectrum_json(const SolveResult& r)
{
    ordered_json meta = ordered_json::object();
    for (const auto& [k, v] : metadata(r)) meta[k] = v;
    ordered_json rows = ordered_json::array();
    for (const SpectrumRow& row : r.rows) {
        ordered_json j = ordered_json::object();
        j["m"] = row.m;
        j["k"] = row.k;
        j["kz"] = row.kz;
        j["E_xy_meV"] = row.e_xy_mev;
        j["E_z_meV"] = row.e_z_mev;
        j["E_meV"] = row.e_mev;
        j["E1_meV"] = row.e1_mev;
        j["E2_meV"] = row.e2_mev;
        j["parity"] = std::string(parity_tag(row.parity));
        j["flags"] = row.flags;
        rows.push_back(std::move(j));
    }
    ordered_json doc = ordered_json::object();
    doc["metadata"] = std::move(meta);
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string spectrum_table(const SolveResult& r)
{
    const int groups = r.config.m_max + 1;
    std::vector<std::vector<const SpectrumRow*>> per_m(static_cast<std::size_t>(groups));
    for (const SpectrumRow& row : r.rows) per_m[static_cast<std::size_t>(row.m)].push_back(&row);
    std::size_t depth = 0;
    for (const auto& g : per_m) depth = std::max(depth, g.size());

    std::ostringstream os;
    os << strf("R = %g nm, l = %g nm, V0 = %g eV, H = %g kOe, parity %s (meV)\n", r.config.radius_nm,
               r.config.height_nm, r.config.barrier_eV, r.config.field_kOe,
               std::string(parity_tag(r.config.parity)).c_str());
    os << "  n";
    for (int m = 0; m < groups; ++m) os << strf(" |      E_%d,n     E1_%d,n     E2_%d,n", m, m, m);
    os << '\n';
    for (std::size_t i = 0; i < depth; ++i) {
        os << strf("%3zu", i + 1);
        for (const auto& g : per_m) {
            if (i < g.size()) os << strf(" | %10.4f %10.4f %10.4f", g[i]->e_mev, g[i]->e1_mev, g[i]->e2_mev);
            else os << " |                                 ";
        }
        os << '\n';
    }
    return os.str();
}

namespace detail {

void write_text(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw ConfigError("write failed for '" + path.string() + "'");
}

std::filesystem::path write_run_metadata(const std::filesystem::path& dir, std::string_view command,
                                         std::string_view config_json,
                                         const std::vector<std::filesystem::path>& written)
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    ordered_json doc = ordered_json::object();
    doc["command"] = std::string(command);
    doc["timestamp_utc"] = stamp;
    doc["config"] = ordered_json::parse(config_json);
    ordered_json files = ordered_json::array();
    for (const auto& p : written) files.push_back(p.filename().string());
    doc["files"] = std::move(files);
    const auto path = dir / "run_metadata.json";
    write_text(path, doc.dump(2) + "\n");
    return path;
}

} // namespace detail

CommandResult cmd_solve(const RunConfig& cfg)
{
    const SolveResult r = solve(cfg);
    const auto dir = cfg.output_path();
    std::filesystem::create_directories(dir);
    CommandResult out{exit_ok, {}, spectrum_table(r)};
    if (cfg.formats != OutputFormat::json) {
        out.written.push_back(dir / "spectrum.csv");
        detail::write_text(out.written.back(), spectrum_csv(r));
    }
    if (cfg.formats != OutputFormat::csv) {
        out.written.push_back(dir / "spectrum.json");
        detail::write_text(out.written.back(), spectrum_json(r));
    }
    for (std::size_t m = 0; m < r.complete.size(); ++m) {
        if (!r.complete[m]) {
            out.summary += strf("note: m = %zu has fewer than %d bound levels\n", m, cfg.levels_per_m);
        }
    }
    out.written.push_back(detail::write_run_metadata(dir, "solve", config_to_json(cfg), out.written));
    return out;
}

} // namespace cylqd::app
