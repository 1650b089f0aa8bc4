#include "semsup/config.hpp"

#include <cmath>
#include <fstream>
#include <map>

#include "semsup/errors.hpp"

namespace semsup {

namespace {

std::string trim(std::string s) {
    const char* ws = " \t\r";
    s.erase(0, s.find_first_not_of(ws));
    auto end = s.find_last_not_of(ws);
    s.erase(end == std::string::npos ? 0 : end + 1);
    return s;
}

double to_double(const std::string& v, const std::string& ctx) {
    try {
        size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError(ctx + ": bad number '" + v + "'");
    }
}

int to_int(const std::string& v, const std::string& ctx) {
    double d = to_double(v, ctx);
    int i = static_cast<int>(d);
    if (static_cast<double>(i) != d)
        throw ConfigError(ctx + ": expected integer, got '" + v + "'");
    return i;
}

} // namespace

RunConfig parse_run_config(std::istream& in, const std::string& name) {
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string ctx = name + ":" + std::to_string(lineno);
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(ctx + ": expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "scheme") cfg.scheme = value;
        else if (key == "omega_bar_rad_per_s") cfg.sim.field.omega_bar = to_double(value, ctx);
        else if (key == "rabi_12_rad_per_s") cfg.sim.field.rabi_12 = to_double(value, ctx);
        else if (key == "photon_number") cfg.sim.field.photon_number = to_double(value, ctx);
        else if (key == "phase_rad") cfg.sim.field.phase = to_double(value, ctx);
        else if (key == "interference_p") cfg.sim.field.interference_p = to_double(value, ctx);
        else if (key == "delta_n") cfg.sim.delta_n = to_int(value, ctx);
        else if (key == "cutoff_w") cfg.sim.cutoff_w = to_int(value, ctx);
        else if (key == "rho") cfg.sim.rho = to_double(value, ctx);
        else if (key == "t_max_s") cfg.sim.t_max = to_double(value, ctx);
        else if (key == "rel_tol") cfg.sim.rel_tol = to_double(value, ctx);
        else if (key == "output_points") cfg.sim.output_points = to_int(value, ctx);
        else if (key == "oracle_delta_n") cfg.oracle_delta_n = to_int(value, ctx);
        else if (key == "oracle_photon_number") cfg.oracle_photon_number = to_double(value, ctx);
        else if (key == "oracle_mode_count") cfg.oracle_mode_count = to_int(value, ctx);
        else if (key == "oracle_half_width_rad_per_s") cfg.oracle_half_width = to_double(value, ctx);
        else if (key == "oracle_cutoff_w") cfg.oracle_cutoff_w = to_int(value, ctx);
        else if (key == "oracle_rel_tol") cfg.oracle_rel_tol = to_double(value, ctx);
        else throw ConfigError(ctx + ": unknown key '" + key + "'");
    }
    validate_run_config(cfg);
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file '" + path + "'");
    return parse_run_config(f, path);
}

void validate_run_config(const RunConfig& cfg) {
    const FieldConfig& f = cfg.sim.field;
    if (f.omega_bar == 0.0)
        throw ConfigError("omega_bar_rad_per_s = 0: static field excluded");
    if (f.omega_bar < 0.0) throw ConfigError("omega_bar_rad_per_s must be positive");
    if (f.rabi_12 < 0.0) throw ConfigError("rabi_12_rad_per_s must be non-negative");
    if (f.photon_number < 1.0) throw ConfigError("photon_number must be >= 1");
    if (f.interference_p < -1.0 || f.interference_p > 1.0)
        throw ConfigError("interference_p must lie in [-1, 1]");
    if (cfg.sim.delta_n < 1) throw ConfigError("delta_n must be >= 1");
    if (cfg.sim.cutoff_w <= 0 || cfg.sim.cutoff_w >= cfg.sim.delta_n)
        throw ConfigError("cutoff_w must satisfy 0 < W < delta_n (W < Delta_N)");
    if (f.photon_number - cfg.sim.delta_n < 0.0)
        throw ConfigError("photon_number - delta_n must be non-negative");
    if (cfg.sim.rho < 0.0) throw ConfigError("rho must be non-negative");
    if (cfg.sim.rel_tol <= 0.0) throw ConfigError("rel_tol must be positive");
    if (cfg.sim.output_points < 2) throw ConfigError("output_points must be >= 2");
    if (cfg.oracle_delta_n < 1) throw ConfigError("oracle_delta_n must be >= 1");
    if (cfg.oracle_cutoff_w <= 0 || cfg.oracle_cutoff_w >= cfg.oracle_delta_n)
        throw ConfigError("oracle_cutoff_w must satisfy 0 < W < oracle_delta_n");
    if (cfg.oracle_photon_number - cfg.oracle_delta_n < 0.0)
        throw ConfigError("oracle_photon_number - oracle_delta_n must be non-negative");
    if (cfg.oracle_rel_tol <= 0.0) throw ConfigError("oracle_rel_tol must be positive");
}

void apply_parameter(RunConfig& cfg, const std::string& param, double value) {
    if (param == "rabi_12") cfg.sim.field.rabi_12 = value;
    else if (param == "omega_bar") cfg.sim.field.omega_bar = value;
    else if (param == "phase") cfg.sim.field.phase = value;
    else if (param == "photon_number") cfg.sim.field.photon_number = value;
    else if (param == "interference_p") cfg.sim.field.interference_p = value;
    else if (param == "cutoff_w") cfg.sim.cutoff_w = static_cast<int>(std::lround(value));
    else if (param == "delta_n") cfg.sim.delta_n = static_cast<int>(std::lround(value));
    else if (param == "rho") cfg.sim.rho = value;
    else throw ConfigError("unknown sweep parameter '" + param + "'");
    validate_run_config(cfg);
}

} // namespace semsup
