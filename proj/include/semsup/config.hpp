#pragma once

#include <istream>
#include <string>

#include "semsup/dynamics.hpp"

namespace semsup {

// One simulation run as described by a flat `key = value` config file.
struct RunConfig {
    std::string scheme = "rubidium"; // builtin name or level-scheme file path
    SimulationConfig sim;

    // oracle (unreduced-check) knobs
    int oracle_delta_n = 20;
    double oracle_photon_number = 1e4;
    int oracle_mode_count = 401;
    double oracle_half_width = 0.0; // rad/s; 0 = 40 * Gamma_hat_21
    int oracle_cutoff_w = 15;
    double oracle_rel_tol = 0.05;   // reduced-vs-full comparison tolerance
};

RunConfig parse_run_config(std::istream& in, const std::string& name);
RunConfig load_run_config(const std::string& path);

// throws ConfigError on violated constraints (W >= Delta_N, omega_bar = 0, ...)
void validate_run_config(const RunConfig& cfg);

// set a sweepable parameter by name (rabi_12, omega_bar, phase, cutoff_w,
// photon_number, rho, delta_n, interference_p)
void apply_parameter(RunConfig& cfg, const std::string& param, double value);

} // namespace semsup
