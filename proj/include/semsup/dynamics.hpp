#pragma once

#include <vector>

#include "semsup/eom.hpp"

namespace semsup {

struct SimulationConfig {
    FieldConfig field;
    int delta_n = 15000;   // Fock window half-width Delta_N
    int cutoff_w = 500;    // coherent-state cutoff W < Delta_N
    double rho = 1e-3;     // damping on d3, d4
    double t_max = 0.0;    // seconds; 0 = default 4 / Gamma_hat_21
    double rel_tol = 1e-8;
    int output_points = 400;
};

struct AmplitudeVector {
    long long offset = 0;     // lowest Fock index N - Delta_N
    std::vector<cplx> values; // E_n, n = offset .. offset + 2*Delta_N
};

struct PopulationTrace {
    std::vector<double> times;     // seconds, strictly increasing
    std::vector<double> pi;        // Pi(t)
    std::vector<double> reference; // exp(-Gamma_hat_21 t)
};

// Truncated coherent state |sqrt(N) e^{i phi}> over n in [N-W, N+W],
// log-domain magnitudes, renormalized to unit norm.
AmplitudeVector prepare_coherent_state(double photon_number, double phi, int cutoff_w,
                                       int delta_n);

// Nine-band stencil d/dt E_n = -sum_delta coef_delta(t) E_{n+delta} with
// coef_delta(t) = base_delta e^{-i delta wbar t}; out-of-window neighbors are zero.
void eval_rhs(double t, const EOMCoefficients& coeffs, const std::vector<cplx>& y,
              std::vector<cplx>& dy);

double population(const AmplitudeVector& state);

// Adaptive integration to t_max, Pi sampled at output_points uniform times
// (including t = 0); gamma_ref supplies the exponential reference curve.
PopulationTrace integrate(const SimulationConfig& config, const EOMCoefficients& coeffs,
                          AmplitudeVector state, double gamma_ref);

// assemble coefficients + initial state + integrate, the standard single run
PopulationTrace run_simulation(const LevelScheme& scheme, const SimulationConfig& config);

// lifetime enhancement t(Pi = 1/e) * Gamma_hat_21; +inf if Pi never drops to 1/e
double trapping_metric(const PopulationTrace& trace, double gamma_hat);

} // namespace semsup
