#pragma once

#include "cylqd/magnetics.hpp"
#include "cylqd/moments.hpp"
#include "cylqd/spectrum.hpp"
#include "cylqd/units.hpp"

#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cylqd::app {

enum class OutputFormat { csv, json, both };
OutputFormat parse_format(std::string_view tag);
std::string_view format_tag(OutputFormat f);

struct SweepAxis {
    std::string parameter; ///< field_kOe | radius_nm | height_nm | barrier_eV
    double start = 0.0;
    double stop = 0.0;
    int steps = 0;

    [[nodiscard]] std::vector<double> values() const;
};

/// Flat run configuration. Defaults are R = 2.75 nm, l = 4 nm, V0 = 1 eV,
/// H = 100 kOe, m = 0..2, ten levels per m, azimuthally averaged densities.
struct RunConfig {
    double radius_nm = 2.75;
    double height_nm = 4.0;
    double barrier_eV = 1.0;
    double field_kOe = 100.0;
    int m_max = 2;
    int levels_per_m = 10;
    AngularParity parity = AngularParity::azimuthal_average;
    std::string output_dir; ///< empty: default_output_dir()
    OutputFormat formats = OutputFormat::both;
    std::optional<SweepAxis> sweep;

    /// Throws ConfigError on any invalid value.
    void validate() const;
    [[nodiscard]] WellGeometry geometry() const;
    [[nodiscard]] FieldSpec field() const;
    [[nodiscard]] std::filesystem::path output_path() const;
};

/// Value of CYLQD_OUT_DIR when set and non-empty, else ".".
std::string default_output_dir();

/// Parse a flat JSON object; unknown keys and wrong types throw ConfigError.
RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::filesystem::path& path);
std::string config_to_json(const RunConfig& cfg);

struct SpectrumRow {
    int m;
    int k;
    int kz;
    double e_xy_mev;
    double e_z_mev;
    double e_mev;
    double e1_mev;
    double e2_mev;
    AngularParity parity;
    std::string flags;
};

struct SolveResult {
    RunConfig config;
    std::vector<CorrectedLevel> levels; ///< per-m groups, ascending inside each group
    std::vector<SpectrumRow> rows;      ///< same order as levels, rounded to 4 decimals
    std::vector<bool> complete;         ///< per m
    double max_truncation_bound;
};

/// Spectrum and field corrections for a configuration (no file output).
SolveResult solve(const RunConfig& cfg);

std::string spectrum_csv(const SolveResult& result);
std::string spectrum_json(const SolveResult& result);
/// Side-by-side text table, one column group per m.
std::string spectrum_table(const SolveResult& result);

struct AuditCheck {
    std::string name;
    bool passed;
    bool fatal;
    std::string detail;
};

struct Table1Audit {
    SolveResult computed;
    std::vector<AuditCheck> checks;
    int cells_within_2mev; ///< out of 90
    std::string report;    ///< full text report including the discrepancy section
    std::string json;

    /// True when every fatal check passed.
    [[nodiscard]] bool ordering_ok() const;
};

Table1Audit audit_table1(AngularParity parity = AngularParity::azimuthal_average);

struct SweepRow {
    double axis_value;
    int m;
    int k;
    int kz;
    double e_mev;
    double e1_mev;
    double e2_mev;
    double shift1; ///< circular correction (hartree), unrounded
    double shift2; ///< elliptic correction (hartree), unrounded
};

struct ExponentFit {
    double mean;
    double max_deviation; ///< max |slope - mean| over states
    int states;
};

struct SweepResult {
    RunConfig config;
    std::vector<SweepRow> rows;
    std::optional<ExponentFit> circular_exponent; ///< field sweeps only
    std::optional<ExponentFit> elliptic_exponent;
    std::string csv;
};

SweepResult run_sweep(const RunConfig& cfg);

struct ValidationCheck {
    std::string name;
    bool passed;
    double measured;
    double tolerance;
    std::string detail;
};

struct ValidateOptions {
    /// Replaces the built-in constant table in the constants check.
    const PhysicalConstants* constants = nullptr;
    /// Coarse-grid point count for the finite-difference comparison (the
    /// automatic grid when unset; below 500 the oracle refuses to run).
    std::optional<int> fd_points;
    int specfun_points = 10000;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    [[nodiscard]] bool passed() const;
    [[nodiscard]] std::string json() const;
};

ValidationReport run_validation(const RunConfig& cfg, const ValidateOptions& opts = {});

struct CommandResult {
    int exit_code;
    std::vector<std::filesystem::path> written;
    std::string summary; ///< text for stdout
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_config = 1;
inline constexpr int exit_numerical = 2;
inline constexpr int exit_validation = 3;

CommandResult cmd_solve(const RunConfig& cfg);
CommandResult cmd_table1(const RunConfig& cfg);
CommandResult cmd_sweep(const RunConfig& cfg);
CommandResult cmd_validate(const RunConfig& cfg, const ValidateOptions& opts = {});

enum class SpecfunKind { J, K };
SpecfunKind parse_specfun_kind(std::string_view tag);
/// Value with 17 significant digits; with `check`, also the oracle value and
/// relative delta.
CommandResult cmd_specfun(SpecfunKind kind, int n, double x, bool check);

/// Exit code for an exception escaping a command.
int exit_code_for(const std::exception& e);

} // namespace cylqd::app
