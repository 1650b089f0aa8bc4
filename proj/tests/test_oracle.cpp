#include <cmath>

#include "doctest.h"

#include "semsup/errors.hpp"
#include "semsup/oracle.hpp"

#include "toys.hpp"

using namespace semsup;

TEST_CASE("vacuum discretization") {
    const double gamma = 37.5e6;
    VacuumModeGrid g = discretize_vacuum(gamma, 2.4e15, gamma, 3);
    CHECK(g.spacing == doctest::Approx(gamma).epsilon(1e-15));
    CHECK(g.coupling == doctest::Approx(gamma / std::sqrt(2.0 * M_PI)).epsilon(1e-12));

    // doubling the resolution halves the spacing and scales g by 1/sqrt(2)
    VacuumModeGrid g5 = discretize_vacuum(gamma, 2.4e15, gamma, 5);
    CHECK(g5.spacing == doctest::Approx(0.5 * g.spacing).epsilon(1e-15));
    CHECK(g5.coupling == doctest::Approx(g.coupling / std::sqrt(2.0)).epsilon(1e-12));

    CHECK_THROWS_AS(discretize_vacuum(gamma, 2.4e15, gamma, 4), ConfigError);
    CHECK_THROWS_AS(discretize_vacuum(gamma, 2.4e15, gamma, 1), ConfigError);
    CHECK_THROWS_AS(discretize_vacuum(gamma, 2.4e15, 0.0, 5), ConfigError);
    CHECK_THROWS_AS(discretize_vacuum(gamma, 2.4e15, -1.0, 5), ConfigError);
}

TEST_CASE("state-size guard") {
    LevelScheme s = two_level_scheme();
    SimulationConfig cfg;
    cfg.delta_n = 400;
    cfg.cutoff_w = 10;
    cfg.field.photon_number = 1e4;
    cfg.t_max = 1e-9;
    VacuumModeGrid grid = discretize_vacuum(s.main_gamma(), s.main_omega(),
                                            40.0 * s.main_gamma(), 3001);
    CHECK_THROWS_AS(integrate_full(s, cfg, grid), OracleSizeError);
}

TEST_CASE("zero vacuum coupling freezes the excited population") {
    LevelScheme s = two_level_scheme();
    SimulationConfig cfg;
    cfg.delta_n = 2;
    cfg.cutoff_w = 1;
    cfg.rho = 0.0;
    cfg.field.photon_number = 1e4;
    cfg.t_max = 1.0 / s.main_gamma();
    cfg.output_points = 11;
    VacuumModeGrid grid = discretize_vacuum(s.main_gamma(), s.main_omega(),
                                            40.0 * s.main_gamma(), 11);
    grid.coupling = 0.0; // decouple by hand
    FullTrace full = integrate_full(s, cfg, grid);
    for (size_t i = 0; i < full.trace.pi.size(); ++i) {
        CHECK(full.trace.pi[i] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(full.norm[i] == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("golden-rule calibration on the bare two-level atom") {
    LevelScheme s = two_level_scheme();
    SimulationConfig cfg;
    cfg.delta_n = 2;
    cfg.cutoff_w = 1;
    cfg.rho = 0.0;
    cfg.field.photon_number = 1e4;
    cfg.t_max = 1.0 / s.main_gamma();
    cfg.output_points = 41;
    cfg.rel_tol = 1e-8;
    VacuumModeGrid grid = discretize_vacuum(s.main_gamma(), s.main_omega(),
                                            40.0 * s.main_gamma(), 801);
    FullTrace full = integrate_full(s, cfg, grid);
    // closed system: total norm conserved
    for (double nrm : full.norm) CHECK(nrm == doctest::Approx(1.0).epsilon(1e-6));
    // Pi tracks the Wigner-Weisskopf exponential
    PopulationTrace exact;
    exact.times = full.trace.times;
    exact.reference = full.trace.reference;
    exact.pi = full.trace.reference;
    CompareReport rep = compare_traces(full.trace, exact, 1.0, 0.04);
    CHECK(rep.max_rel <= 0.04);
    CHECK(rep.pass);
}

TEST_CASE("frozen sqrt(n) vertices stay close to the exact ones") {
    LevelScheme s = load_level_scheme("rubidium");
    SimulationConfig cfg;
    cfg.delta_n = 10;
    cfg.cutoff_w = 7;
    cfg.rho = 0.0;
    cfg.field.photon_number = 1e4;
    cfg.t_max = 0.5 / s.main_gamma();
    cfg.output_points = 21;
    VacuumModeGrid grid = discretize_vacuum(s.main_gamma(), s.main_omega(),
                                            40.0 * s.main_gamma(), 101);
    FullTrace exact = integrate_full(s, cfg, grid, false);
    FullTrace frozen = integrate_full(s, cfg, grid, true);
    CompareReport rep = compare_traces(exact.trace, frozen.trace, 1e-3, 1.0);
    CHECK(rep.max_abs <= 1e-3);
}

TEST_CASE("compare_traces") {
    PopulationTrace a;
    a.times = {0.0, 1.0, 2.0};
    a.pi = {1.0, 0.5, 0.25};
    a.reference = a.pi;
    PopulationTrace b = a;
    CompareReport same = compare_traces(a, b, 1e-12, 1e-12);
    CHECK(same.pass);
    CHECK(same.max_abs == 0.0);

    b.pi[2] = 0.26;
    CompareReport diff = compare_traces(a, b, 1e-3, 1e-3);
    CHECK(!diff.pass);
    CHECK(diff.max_abs == doctest::Approx(0.01));
    CHECK(diff.t_at_abs == 2.0);
    CHECK(diff.max_rel == doctest::Approx(0.01 / 0.26));

    // either criterion is enough to pass
    CHECK(compare_traces(a, b, 0.02, 1e-6).pass);
    CHECK(compare_traces(a, b, 1e-6, 0.05).pass);

    PopulationTrace c;
    c.times = {0.0, 1.0};
    c.pi = {1.0, 0.5};
    CHECK_THROWS_AS(compare_traces(a, c, 1.0, 1.0), ConfigError);
    c.times = {0.0, 1.0, 2.5};
    c.pi = {1.0, 0.5, 0.25};
    CHECK_THROWS_AS(compare_traces(a, c, 1.0, 1.0), ConfigError);
}
