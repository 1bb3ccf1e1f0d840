#include "cylqd/app.hpp"

#include "cylqd/errors.hpp"
#include "cylqd/specfun.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace cylqd::app {

using nlohmann::json;

OutputFormat parse_format(std::string_view tag)
{
    if (tag == "csv") return OutputFormat::csv;
    if (tag == "json") return OutputFormat::json;
    if (tag == "both") return OutputFormat::both;
    throw ConfigError("unknown output format '" + std::string(tag) + "' (expected csv, json or both)");
}

std::string_view format_tag(OutputFormat f)
{
    switch (f) {
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    case OutputFormat::both: return "both";
    }
    return "both";
}

std::vector<double> SweepAxis::values() const
{
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        v.push_back(i == steps - 1 ? stop : start + (stop - start) * i / (steps - 1));
    }
    return v;
}

namespace {

void require_positive(double v, const char* name)
{
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ConfigError(std::string(name) + " must be a finite positive number");
    }
}

void check_axis_value(const std::string& parameter, double v, const char* which)
{
    if (parameter == "field_kOe") {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw ConfigError(std::string("sweep ") + which + " must be finite and >= 0 for field_kOe");
        }
    } else {
        require_positive(v, (std::string("sweep ") + which).c_str());
    }
}

} // namespace

void RunConfig::validate() const
{
    require_positive(radius_nm, "radius_nm");
    require_positive(height_nm, "height_nm");
    require_positive(barrier_eV, "barrier_eV");
    if (!(field_kOe >= 0.0) || !std::isfinite(field_kOe)) throw ConfigError("field_kOe must be finite and >= 0");
    if (m_max < 0 || m_max >= specfun::max_order) {
        throw ConfigError("m_max must lie in [0, " + std::to_string(specfun::max_order - 1) + "]");
    }
    if (levels_per_m < 1 || levels_per_m > 1000) throw ConfigError("levels_per_m must lie in [1, 1000]");
    if (sweep) {
        static const std::set<std::string> axes{"field_kOe", "radius_nm", "height_nm", "barrier_eV"};
        if (!axes.contains(sweep->parameter)) {
            throw ConfigError("sweep parameter '" + sweep->parameter
                              + "' must be one of field_kOe, radius_nm, height_nm, barrier_eV");
        }
        if (sweep->steps < 2) throw ConfigError("sweep steps must be >= 2");
        check_axis_value(sweep->parameter, sweep->start, "start");
        check_axis_value(sweep->parameter, sweep->stop, "stop");
    }
}

WellGeometry RunConfig::geometry() const
{
    return WellGeometry::from_lab_units(radius_nm, height_nm, barrier_eV);
}

FieldSpec RunConfig::field() const
{
    return FieldSpec::from_kOe(field_kOe);
}

std::filesystem::path RunConfig::output_path() const
{
    return output_dir.empty() ? std::filesystem::path(default_output_dir()) : std::filesystem::path(output_dir);
}

std::string default_output_dir()
{
    const char* env = std::getenv("CYLQD_OUT_DIR");
    return (env != nullptr && *env != '\0') ? std::string(env) : std::string(".");
}

namespace {

double get_number(const json& v, const char* key)
{
    if (!v.is_number()) throw ConfigError(std::string("config key '") + key + "' must be a number");
    return v.get<double>();
}

int get_int(const json& v, const char* key)
{
    if (!v.is_number_integer()) throw ConfigError(std::string("config key '") + key + "' must be an integer");
    return v.get<int>();
}

std::string get_string(const json& v, const char* key)
{
    if (!v.is_string()) throw ConfigError(std::string("config key '") + key + "' must be a string");
    return v.get<std::string>();
}

SweepAxis parse_sweep(const json& v)
{
    if (!v.is_object()) throw ConfigError("config key 'sweep' must be an object");
    SweepAxis axis;
    bool seen[4] = {false, false, false, false};
    for (const auto& [key, value] : v.items()) {
        if (key == "parameter") {
            axis.parameter = get_string(value, "sweep.parameter");
            seen[0] = true;
        } else if (key == "start") {
            axis.start = get_number(value, "sweep.start");
            seen[1] = true;
        } else if (key == "stop") {
            axis.stop = get_number(value, "sweep.stop");
            seen[2] = true;
        } else if (key == "steps") {
            axis.steps = get_int(value, "sweep.steps");
            seen[3] = true;
        } else {
            throw ConfigError("unknown sweep key '" + key + "'");
        }
    }
    if (!(seen[0] && seen[1] && seen[2] && seen[3])) {
        throw ConfigError("sweep needs parameter, start, stop and steps");
    }
    return axis;
}

OutputFormat parse_formats(const json& v)
{
    if (v.is_string()) return parse_format(v.get<std::string>());
    if (!v.is_array() || v.empty()) throw ConfigError("config key 'formats' must be a string or non-empty array");
    bool csv = false;
    bool js = false;
    for (const auto& item : v) {
        switch (parse_format(get_string(item, "formats[]"))) {
        case OutputFormat::csv: csv = true; break;
        case OutputFormat::json: js = true; break;
        case OutputFormat::both: csv = js = true; break;
        }
    }
    return csv && js ? OutputFormat::both : (csv ? OutputFormat::csv : OutputFormat::json);
}

} // namespace

RunConfig parse_config(std::string_view json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");

    RunConfig cfg;
    for (const auto& [key, value] : doc.items()) {
        if (key == "radius_nm") cfg.radius_nm = get_number(value, "radius_nm");
        else if (key == "height_nm") cfg.height_nm = get_number(value, "height_nm");
        else if (key == "barrier_eV") cfg.barrier_eV = get_number(value, "barrier_eV");
        else if (key == "field_kOe") cfg.field_kOe = get_number(value, "field_kOe");
        else if (key == "m_max") cfg.m_max = get_int(value, "m_max");
        else if (key == "levels_per_m") cfg.levels_per_m = get_int(value, "levels_per_m");
        else if (key == "parity") cfg.parity = parse_parity(get_string(value, "parity"));
        else if (key == "output_dir") cfg.output_dir = get_string(value, "output_dir");
        else if (key == "formats") cfg.formats = parse_formats(value);
        else if (key == "sweep") cfg.sweep = parse_sweep(value);
        else throw ConfigError("unknown config key '" + key + "'");
    }
    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string config_to_json(const RunConfig& cfg)
{
    json j = json::object();
    j["radius_nm"] = cfg.radius_nm;
    j["height_nm"] = cfg.height_nm;
    j["barrier_eV"] = cfg.barrier_eV;
    j["field_kOe"] = cfg.field_kOe;
    j["m_max"] = cfg.m_max;
    j["levels_per_m"] = cfg.levels_per_m;
    j["parity"] = std::string(parity_tag(cfg.parity));
    j["output_dir"] = cfg.output_dir;
    j["formats"] = std::string(format_tag(cfg.formats));
    if (cfg.sweep) {
        j["sweep"] = {{"parameter", cfg.sweep->parameter},
                      {"start", cfg.sweep->start},
                      {"stop", cfg.sweep->stop},
                      {"steps", cfg.sweep->steps}};
    }
    return j.dump(2);
}

} // namespace cylqd::app
