#pragma once

#include "semsup/dynamics.hpp"

namespace semsup {

struct VacuumModeGrid {
    double center = 0.0;     // rad/s
    double half_width = 0.0; // Lambda, rad/s
    int mode_count = 0;      // M, odd
    double spacing = 0.0;    // 2*Lambda / (M-1)
    double coupling = 0.0;   // g = sqrt(gamma_hat * spacing / 2 pi)
};

// Uniform grid calibrated so the Fermi-golden-rule rate equals gamma_hat.
VacuumModeGrid discretize_vacuum(double gamma_hat, double center, double half_width,
                                 int mode_count);

struct FullTrace {
    PopulationTrace trace;    // Pi(t) of the unreduced system
    std::vector<double> norm; // total norm per sample (should stay at 1)
};

// Unreduced E_n / G_n^k integration (closed, unitary).  The grid is centered
// on the Stark-shifted transition frequency.  freeze_sqrt_n replaces the exact
// sqrt(n)-type vertex factors by their sqrt(N) freeze (the reduced model's
// approximation), isolating the Markov step when false.
FullTrace integrate_full(const LevelScheme& scheme, const SimulationConfig& config,
                         const VacuumModeGrid& grid, bool freeze_sqrt_n = false);

struct CompareReport {
    double max_abs = 0.0;
    double t_at_abs = 0.0;
    double max_rel = 0.0;
    double t_at_rel = 0.0;
    bool pass = false;
};

// pointwise comparison of two traces on a common time grid
CompareReport compare_traces(const PopulationTrace& a, const PopulationTrace& b,
                             double abs_tol, double rel_tol);

} // namespace semsup
