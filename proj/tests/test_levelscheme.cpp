#include <cmath>
#include <sstream>

#include "doctest.h"

#include "semsup/constants.hpp"
#include "semsup/errors.hpp"
#include "semsup/levelscheme.hpp"

using namespace semsup;

TEST_CASE("builtin rubidium scheme") {
    LevelScheme s = load_level_scheme("rubidium");
    CHECK(s.levels.size() == 8);
    CHECK(s.transitions.size() == 14);
    CHECK(s.main_gamma() == 37.5e6);
    CHECK(s.main_omega() == doctest::Approx(2.414e15).epsilon(2e-3));
    // all listed transitions dipole-allowed
    for (const auto& t : s.transitions) {
        CHECK(t.allowed);
        CHECK(t.dipole > 0.0);
    }
    // main-transition dipole moment from the closed form
    CHECK(s.main_dipole() == doctest::Approx(2.51e-29).epsilon(5e-3));
    // deterministic / idempotent
    LevelScheme s2 = load_level_scheme("rubidium");
    for (size_t i = 0; i < s.transitions.size(); ++i)
        CHECK(s.transitions[i].dipole == s2.transitions[i].dipole);
}

TEST_CASE("dipole_from_decay_rate") {
    CHECK(dipole_from_decay_rate(0.0, 1e15) == 0.0);
    const double d = dipole_from_decay_rate(37.5e6, 2.414e15);
    CHECK(d == doctest::Approx(2.5e-29).epsilon(0.01));
    // quadrupling gamma doubles d
    CHECK(dipole_from_decay_rate(4.0 * 37.5e6, 2.414e15) ==
          doctest::Approx(2.0 * d).epsilon(1e-12));
    // round trip: d -> gamma -> d is the identity
    const double omega = 1.7e15;
    using namespace consts;
    const double gamma = d * d * omega * omega * omega /
                         (3.0 * M_PI * eps0 * hbar * c_light * c_light * c_light);
    CHECK(dipole_from_decay_rate(gamma, omega) == doctest::Approx(d).epsilon(1e-12));
    CHECK_THROWS_AS(dipole_from_decay_rate(1e6, 0.0), PhysicsError);
}

TEST_CASE("selection rules") {
    LevelScheme s;
    s.levels = {{1, "a", 0.0, 0}, {2, "b", 1.0, 1}, {3, "c", 2.0, 0}};
    s.transitions = {{2, 1, 1e7}};
    s.main_lower = 1;
    s.main_upper = 2;
    s.validate();
    CHECK(s.pair_allowed(1, 2));  // dl = 1
    CHECK(!s.pair_allowed(1, 3)); // dl = 0
    auto entries = validate_selection_rules(s);
    CHECK(entries.size() == 3);
    for (const auto& e : entries) {
        if ((e.upper == 3 && e.lower == 1))
            CHECK(e.reason == "parity");
        else
            CHECK(e.allowed);
    }
}

TEST_CASE("forbidden pairs carry zero dipole downstream") {
    LevelScheme s;
    s.levels = {{1, "a", 0.0, 0}, {2, "b", 1.0, 1}, {3, "c", 2.0, 1}};
    // (3,1) allowed; (3,2) has dl = 0 and must end up forbidden with d = 0
    s.transitions = {{2, 1, 1e7}, {3, 1, 1e7}, {3, 2, 1e7}};
    s.main_lower = 1;
    s.main_upper = 2;
    s.validate();
    CHECK(s.dipole(3, 2) == 0.0);
    CHECK(s.gamma_hat(3, 2) == 0.0);
    CHECK(s.dipole(3, 1) > 0.0);
    CHECK(s.dipole(4, 1) == 0.0); // absent pair
}

TEST_CASE("parser and validation errors") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_level_scheme(in, "test");
    };
    // minimal valid document
    LevelScheme s = parse("main_upper = 2\nmain_lower = 1\n"
                          "[level]\nid = 1\nenergy_eV = 0\norbital_l = 0\n"
                          "[level]\nid = 2\nenergy_eV = 1.5\norbital_l = 1\n"
                          "[transition]\nupper = 2\nlower = 1\ngamma_hat_per_s = 1e7\n");
    CHECK(s.levels.size() == 2);
    CHECK(s.main_dipole() > 0.0);

    // zero transitions -> missing main transition
    CHECK_THROWS_WITH_AS(parse("main_upper = 2\nmain_lower = 1\n"
                               "[level]\nid = 1\nenergy_eV = 0\norbital_l = 0\n"
                               "[level]\nid = 2\nenergy_eV = 1.5\norbital_l = 1\n"),
                         doctest::Contains("missing main transition"), ConfigError);
    // unknown level reference
    CHECK_THROWS_WITH_AS(
        parse("main_upper = 2\nmain_lower = 1\n"
              "[level]\nid = 1\nenergy_eV = 0\norbital_l = 0\n"
              "[level]\nid = 2\nenergy_eV = 1.5\norbital_l = 1\n"
              "[transition]\nupper = 2\nlower = 1\ngamma_hat_per_s = 1e7\n"
              "[transition]\nupper = 9\nlower = 1\ngamma_hat_per_s = 1e7\n"),
        doctest::Contains("unknown level reference"), ConfigError);
    // duplicate id
    CHECK_THROWS_WITH_AS(parse("main_upper = 2\nmain_lower = 1\n"
                               "[level]\nid = 1\nenergy_eV = 0\norbital_l = 0\n"
                               "[level]\nid = 1\nenergy_eV = 1.5\norbital_l = 1\n"),
                         doctest::Contains("duplicate level id"), ConfigError);
    // negative rate
    CHECK_THROWS_AS(parse("main_upper = 2\nmain_lower = 1\n"
                          "[level]\nid = 1\nenergy_eV = 0\norbital_l = 0\n"
                          "[level]\nid = 2\nenergy_eV = 1.5\norbital_l = 1\n"
                          "[transition]\nupper = 2\nlower = 1\ngamma_hat_per_s = -1\n"),
                    ConfigError);
    CHECK_THROWS_AS(load_level_scheme("/nonexistent/scheme.txt"), ConfigError);
}
