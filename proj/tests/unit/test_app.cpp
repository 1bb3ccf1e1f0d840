#include "cylqd/app.hpp"
#include "cylqd/errors.hpp"
#include "cylqd/table1.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace cylqd;
using namespace cylqd::app;

namespace {

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path scratch(const std::string& name)
{
    auto p = std::filesystem::temp_directory_path() / ("cylqd_test_" + name);
    std::filesystem::remove_all(p);
    return p;
}

} // namespace

TEST_CASE("shipped default config equals the built-in defaults")
{
    const RunConfig file = load_config(std::filesystem::path(CYLQD_DATA_DIR) / "default_config.json");
    const RunConfig def;
    CHECK(file.radius_nm == def.radius_nm);
    CHECK(file.height_nm == def.height_nm);
    CHECK(file.barrier_eV == def.barrier_eV);
    CHECK(file.field_kOe == def.field_kOe);
    CHECK(file.m_max == def.m_max);
    CHECK(file.levels_per_m == def.levels_per_m);
    CHECK(file.parity == def.parity);
}

TEST_CASE("config parsing rejects bad input")
{
    CHECK_THROWS_AS(parse_config(R"({"radius": 3})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"radius_nm": "3"})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"radius_nm": -1})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"levels_per_m": 2.5})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"parity": "up"})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"formats": "xml"})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"([1, 2])"), ConfigError);
    CHECK_THROWS_AS(parse_config("{"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"sweep": {"parameter": "field_kOe", "start": 0, "stop": 1, "steps": 1}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"sweep": {"parameter": "mass", "start": 1, "stop": 2, "steps": 3}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"sweep": {"parameter": "field_kOe", "start": 0, "stop": 1, "steps": 3, "x": 1}})"),
                    ConfigError);
}

TEST_CASE("config round trip")
{
    const RunConfig c = parse_config(
        R"({"radius_nm": 3, "parity": "cos", "formats": ["csv"], "sweep": {"parameter": "barrier_eV", "start": 1, "stop": 100, "steps": 4}})");
    CHECK(c.radius_nm == 3.0);
    CHECK(c.parity == AngularParity::cosine);
    CHECK(c.formats == OutputFormat::csv);
    REQUIRE(c.sweep);
    CHECK(c.sweep->values() == std::vector<double>{1.0, 34.0, 67.0, 100.0});
    const RunConfig back = parse_config(config_to_json(c));
    CHECK(back.radius_nm == c.radius_nm);
    CHECK(back.sweep->steps == 4);
}

TEST_CASE("output directory from the environment")
{
    setenv("CYLQD_OUT_DIR", "/tmp/somewhere", 1);
    CHECK(default_output_dir() == "/tmp/somewhere");
    CHECK(RunConfig{}.output_path() == std::filesystem::path("/tmp/somewhere"));
    unsetenv("CYLQD_OUT_DIR");
    CHECK(default_output_dir() == ".");
}

TEST_CASE("default solve has 30 rows obeying the row invariants")
{
    const SolveResult r = solve(RunConfig{});
    REQUIRE(r.rows.size() == 30);
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        const SpectrumRow& row = r.rows[i];
        CHECK(std::abs(row.e_mev - (row.e_xy_mev + row.e_z_mev)) <= 1.5e-4);
        CHECK(r.levels[i].elliptic.e_h2 <= r.levels[i].circular.e_h2);
        if (i > 0 && r.rows[i - 1].m == row.m) CHECK(row.e_mev >= r.rows[i - 1].e_mev);
    }
    CHECK(r.rows.front().e_mev == doctest::Approx(48.8886).epsilon(1e-6));
    CHECK(r.max_truncation_bound < 1e-30);
}

TEST_CASE("zero field leaves E1 = E2 = E")
{
    RunConfig c;
    c.field_kOe = 0.0;
    for (const SpectrumRow& row : solve(c).rows) {
        CHECK(row.e1_mev == row.e_mev);
        CHECK(row.e2_mev == row.e_mev);
    }
}

TEST_CASE("deep well approaches the hard-wall law")
{
    RunConfig c;
    c.barrier_eV = 1e4;
    c.levels_per_m = 3;
    const SolveResult r = solve(c);
    const double zeros[3] = {2.404825557695773, 3.831705970207512, 5.135622301840683};
    const WellGeometry g = c.geometry();
    for (const CorrectedLevel& lv : r.levels) {
        if (lv.state.qn.k != 1) continue;
        const double z = zeros[lv.state.qn.m];
        const double hard = 0.5 * z * z / (g.radius() * g.radius());
        CHECK(std::abs(lv.state.exy - hard) / hard <= 5e-3);
    }
}

TEST_CASE("strong field is flagged")
{
    RunConfig c;
    c.field_kOe = 200.0;
    c.levels_per_m = 1;
    CHECK(solve(c).rows.front().flags.find("strong_field") != std::string::npos);
}

TEST_CASE("csv and json carry the same rows")
{
    const SolveResult r = solve(RunConfig{});
    const std::string csv = spectrum_csv(r);
    CHECK(csv.find("m,k,kz,E_xy_meV,E_z_meV,E_meV,E1_meV,E2_meV,parity,flags\n") != std::string::npos);
    CHECK(csv.find("0,1,1,25.3867,23.5019,48.8886,") != std::string::npos);
    const std::string js = spectrum_json(r);
    CHECK(js.find("\"E_meV\": 48.8886") != std::string::npos);
    CHECK(js.find("timestamp") == std::string::npos);
}

TEST_CASE("solve writes byte-identical files on repeat")
{
    const auto da = scratch("a");
    const auto db = scratch("b");
    RunConfig c;
    c.output_dir = da.string();
    CHECK(cmd_solve(c).exit_code == exit_ok);
    c.output_dir = db.string();
    CHECK(cmd_solve(c).exit_code == exit_ok);
    for (const char* f : {"spectrum.csv", "spectrum.json"}) {
        CHECK(std::filesystem::exists(da / f));
        CHECK(slurp(da / f) == slurp(db / f));
    }
    CHECK(slurp(da / "run_metadata.json").find("timestamp_utc") != std::string::npos);
}

TEST_CASE("format selection")
{
    const auto d = scratch("fmt");
    RunConfig c;
    c.output_dir = d.string();
    c.formats = OutputFormat::json;
    cmd_solve(c);
    CHECK(std::filesystem::exists(d / "spectrum.json"));
    CHECK_FALSE(std::filesystem::exists(d / "spectrum.csv"));
}

TEST_CASE("reference table fixture")
{
    const auto& row1 = table1::reference[0];
    CHECK(row1[0].e == 57);
    CHECK(row1[0].e1 == 59);
    CHECK(row1[0].e2 == 60);
    CHECK(row1[1].e == 109);
    CHECK(row1[2].e2 == 181);
    CHECK(table1::reference[1][0].e - row1[0].e == 71);
    CHECK(table1::reference[1][1].e - row1[1].e == 71);
}

TEST_CASE("table audit: ordering passes, absolute agreement is only reported")
{
    const Table1Audit a = audit_table1();
    CHECK(a.ordering_ok());
    CHECK(a.cells_within_2mev >= 0);
    bool has_d = false;
    for (const AuditCheck& c : a.checks) {
        if (c.name.rfind("(d)", 0) == 0) {
            has_d = true;
            CHECK_FALSE(c.fatal);
        }
    }
    CHECK(has_d);
    CHECK(a.report.find("Discrepancies") != std::string::npos);
    CHECK(a.report.find("eigen-equation sign") != std::string::npos);

    const auto d = scratch("t1");
    RunConfig c;
    c.output_dir = d.string();
    CHECK(cmd_table1(c).exit_code == exit_ok);
    CHECK(std::filesystem::exists(d / "table1_audit.txt"));
    CHECK(std::filesystem::exists(d / "table1_audit.json"));
}

TEST_CASE("field sweep")
{
    RunConfig c;
    c.sweep = SweepAxis{"field_kOe", 0.0, 100.0, 11};
    const SweepResult r = run_sweep(c);
    REQUIRE(r.rows.size() == 11 * 30);
    for (std::size_t i = 0; i < 30; ++i) CHECK(r.rows[i].e1_mev == r.rows[i].e_mev);
    // rows 5*30.. are H = 50, rows 10*30.. are H = 100
    for (std::size_t i = 0; i < 30; ++i) {
        CHECK(std::abs(r.rows[300 + i].shift1 / r.rows[150 + i].shift1 - 4.0) <= 1e-6);
    }
    REQUIRE(r.circular_exponent);
    CHECK(std::abs(r.circular_exponent->mean - 2.0) <= 1e-3);
    REQUIRE(r.elliptic_exponent);
    CHECK(std::abs(r.elliptic_exponent->mean - 2.0) <= 1e-3);
    CHECK(r.csv.find("field_kOe,m,k,kz,E_meV,E1_meV,E2_meV\n") != std::string::npos);
}

TEST_CASE("barrier sweep: ground level rises")
{
    RunConfig c;
    c.m_max = 0;
    c.levels_per_m = 1;
    c.sweep = SweepAxis{"barrier_eV", 1.0, 100.0, 5};
    const SweepResult r = run_sweep(c);
    REQUIRE(r.rows.size() == 5);
    for (std::size_t i = 1; i < r.rows.size(); ++i) CHECK(r.rows[i].e_mev > r.rows[i - 1].e_mev);
    CHECK_FALSE(r.circular_exponent);
}

TEST_CASE("sweep without an axis is a config error")
{
    CHECK_THROWS_AS(run_sweep(RunConfig{}), ConfigError);
}

TEST_CASE("validation: coarse grid and tampered constants fail")
{
    RunConfig c;
    c.m_max = 0;
    c.levels_per_m = 2;
    ValidateOptions quick;
    quick.specfun_points = 52;
    CHECK(run_validation(c, quick).passed());

    ValidateOptions coarse = quick;
    coarse.fd_points = 300;
    const ValidationReport r = run_validation(c, coarse);
    CHECK_FALSE(r.passed());
    bool found = false;
    for (const ValidationCheck& k : r.checks) {
        if (k.name == "solver_vs_fd") {
            found = true;
            CHECK_FALSE(k.passed);
            CHECK(k.detail.find("500-point floor") != std::string::npos);
        }
    }
    CHECK(found);

    PhysicalConstants bad = codata2018();
    bad.hartree_in_ev *= 1.0001;
    ValidateOptions tampered = quick;
    tampered.constants = &bad;
    CHECK_FALSE(run_validation(c, tampered).passed());

    c.output_dir = scratch("val").string();
    CHECK(cmd_validate(c, coarse).exit_code == exit_validation);
}

TEST_CASE("specfun command")
{
    CHECK(cmd_specfun(SpecfunKind::J, 0, 0.0, false).summary == "1.0000000000000000\n");
    CHECK(cmd_specfun(SpecfunKind::K, 0, 1.0, false).summary == "0.42102443824070834\n");
    const CommandResult r = cmd_specfun(SpecfunKind::J, 3, 2.5, true);
    CHECK(r.summary.find("delta") != std::string::npos);
    CHECK_THROWS_AS(cmd_specfun(SpecfunKind::K, 0, -1.0, false), DomainError);
    CHECK_THROWS_AS(parse_specfun_kind("Y"), ConfigError);
}

TEST_CASE("exit codes")
{
    CHECK(exit_code_for(ConfigError("x")) == exit_config);
    CHECK(exit_code_for(DomainError("x")) == exit_config);
    CHECK(exit_code_for(NumericalError("x")) == exit_numerical);
    CHECK(exit_code_for(ResolutionError("x")) == exit_numerical);
}
