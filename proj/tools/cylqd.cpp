#include "cylqd/app.hpp"
#include "cylqd/errors.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

namespace {

using namespace cylqd;

struct Overrides {
    std::string config;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<std::string> parity;
    std::optional<double> radius_nm;
    std::optional<double> height_nm;
    std::optional<double> barrier_eV;
    std::optional<double> field_kOe;
    std::optional<int> m_max;
    std::optional<int> levels;
};

struct SweepOverrides {
    std::optional<std::string> parameter;
    std::optional<double> start;
    std::optional<double> stop;
    std::optional<int> steps;
};

void add_run_options(CLI::App* cmd, Overrides& o)
{
    cmd->add_option("--config", o.config, "JSON run configuration");
    cmd->add_option("--out", o.out, "output directory");
    cmd->add_option("--format", o.format, "csv, json or both")->check(CLI::IsMember({"csv", "json", "both"}));
    cmd->add_option("--parity", o.parity, "cos, sin or avg")->check(CLI::IsMember({"cos", "sin", "avg"}));
    cmd->add_option("--radius-nm", o.radius_nm, "well radius (nm)");
    cmd->add_option("--height-nm", o.height_nm, "well height (nm)");
    cmd->add_option("--barrier-eV", o.barrier_eV, "lateral barrier (eV)");
    cmd->add_option("--field-kOe", o.field_kOe, "magnetic field (kOe)");
    cmd->add_option("--m-max", o.m_max, "largest angular index");
    cmd->add_option("--levels", o.levels, "levels per m");
}

app::RunConfig build_config(const Overrides& o, const SweepOverrides* s = nullptr)
{
    app::RunConfig cfg = o.config.empty() ? app::RunConfig{} : app::load_config(o.config);
    if (o.out) cfg.output_dir = *o.out;
    if (o.format) cfg.formats = app::parse_format(*o.format);
    if (o.parity) cfg.parity = parse_parity(*o.parity);
    if (o.radius_nm) cfg.radius_nm = *o.radius_nm;
    if (o.height_nm) cfg.height_nm = *o.height_nm;
    if (o.barrier_eV) cfg.barrier_eV = *o.barrier_eV;
    if (o.field_kOe) cfg.field_kOe = *o.field_kOe;
    if (o.m_max) cfg.m_max = *o.m_max;
    if (o.levels) cfg.levels_per_m = *o.levels;
    if (s != nullptr && (s->parameter || s->start || s->stop || s->steps)) {
        app::SweepAxis axis = cfg.sweep.value_or(app::SweepAxis{});
        if (s->parameter) axis.parameter = *s->parameter;
        if (s->start) axis.start = *s->start;
        if (s->stop) axis.stop = *s->stop;
        if (s->steps) axis.steps = *s->steps;
        cfg.sweep = axis;
    }
    cfg.validate();
    return cfg;
}

int report(const app::CommandResult& r)
{
    std::cout << r.summary;
    for (const auto& p : r.written) std::cerr << "wrote " << p.string() << '\n';
    return r.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App cli{"Bound states of a cylindrical quantum well and their quadratic magnetic corrections"};
    cli.require_subcommand(1);

    Overrides solve_o;
    auto* solve = cli.add_subcommand("solve", "spectrum with field corrections (spectrum.csv / spectrum.json)");
    add_run_options(solve, solve_o);

    Overrides table_o;
    auto* table = cli.add_subcommand("table1", "audit against the embedded reference table");
    add_run_options(table, table_o);

    Overrides sweep_o;
    SweepOverrides sweep_s;
    auto* sweep = cli.add_subcommand("sweep", "parameter sweep (sweep.csv)");
    add_run_options(sweep, sweep_o);
    sweep->add_option("--sweep-parameter", sweep_s.parameter, "field_kOe, radius_nm, height_nm or barrier_eV");
    sweep->add_option("--sweep-start", sweep_s.start, "first axis value");
    sweep->add_option("--sweep-stop", sweep_s.stop, "last axis value");
    sweep->add_option("--sweep-steps", sweep_s.steps, "number of axis values (>= 2)");

    Overrides validate_o;
    std::optional<int> fd_points;
    int specfun_points = 10000;
    auto* validate = cli.add_subcommand("validate", "run the oracle suite (validate.json)");
    add_run_options(validate, validate_o);
    validate->add_option("--fd-points", fd_points, "finite-difference grid points (default: automatic)");
    validate->add_option("--specfun-points", specfun_points, "special-function grid size");

    std::string kind;
    int order = 0;
    double x = 0.0;
    bool check = false;
    auto* specfun = cli.add_subcommand("specfun", "evaluate J_n(x) or K_n(x)");
    specfun->add_option("kind", kind, "J or K")->required();
    specfun->add_option("n", order, "integer order")->required();
    specfun->add_option("x", x, "argument")->required();
    specfun->add_flag("--check", check, "compare with the multi-precision reference");

    try {
        cli.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return cli.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return cli.exit(e);
    } catch (const CLI::ParseError& e) {
        cli.exit(e);
        return app::exit_config;
    }

    try {
        if (*solve) return report(app::cmd_solve(build_config(solve_o)));
        if (*table) return report(app::cmd_table1(build_config(table_o)));
        if (*sweep) return report(app::cmd_sweep(build_config(sweep_o, &sweep_s)));
        if (*validate) {
            app::ValidateOptions opts;
            opts.fd_points = fd_points;
            opts.specfun_points = specfun_points;
            return report(app::cmd_validate(build_config(validate_o), opts));
        }
        if (*specfun) return report(app::cmd_specfun(app::parse_specfun_kind(kind), order, x, check));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return app::exit_code_for(e);
    }
    return app::exit_config;
}
