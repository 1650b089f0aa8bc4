#pragma once

// shared test fixtures: two-level and randomized toy schemes, plus builders
// for the literal-transcription oracle inputs

#include <random>

#include "semsup/constants.hpp"
#include "semsup/couplings.hpp"

#include "literal.hpp"

inline semsup::LevelScheme two_level_scheme() {
    semsup::LevelScheme s;
    s.levels = {{1, "g", 0.0, 0}, {2, "e", 1.589, 1}};
    s.transitions = {{2, 1, 37.5e6}};
    s.main_lower = 1;
    s.main_upper = 2;
    s.validate();
    return s;
}

inline semsup::LevelScheme random_toy_scheme(std::mt19937& rng) {
    using namespace semsup;
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (;;) {
        LevelScheme s;
        const int naux = 1 + static_cast<int>(rng() % 3);
        std::vector<double> energies = {0.0, 1.2 + u01(rng)};
        std::vector<int> ls = {0, 1};
        bool ok = true;
        for (int a = 0; a < naux; ++a) {
            const double e = 0.3 + 3.1 * u01(rng);
            for (double prev : energies)
                if (std::abs(e - prev) < 0.05) ok = false;
            energies.push_back(e);
            ls.push_back(static_cast<int>(rng() % 3));
        }
        if (!ok) continue;
        for (size_t i = 0; i < energies.size(); ++i)
            s.levels.push_back({static_cast<int>(i + 1), "L" + std::to_string(i + 1),
                                energies[i], ls[i]});
        for (size_t a = 0; a < s.levels.size(); ++a)
            for (size_t b = a + 1; b < s.levels.size(); ++b) {
                const Level &x = s.levels[a], &y = s.levels[b];
                if (std::abs(x.orbital_l - y.orbital_l) != 1) continue;
                const bool is_main = (x.id == 1 && y.id == 2);
                if (!is_main && u01(rng) < 0.2) continue; // drop some transitions
                const int up = x.energy_ev > y.energy_ev ? x.id : y.id;
                const int lo = up == x.id ? y.id : x.id;
                s.transitions.push_back({up, lo, 1e6 + 4.9e7 * u01(rng)});
            }
        s.main_lower = 1;
        s.main_upper = 2;
        if (!s.find_transition(1, 2)) continue; // main pair parity-forbidden roll
        try {
            s.validate();
        } catch (const std::exception&) {
            continue;
        }
        return s;
    }
}

// literal-oracle input built directly from first principles (no LambdaSet)
inline literal::Input make_literal_input(const semsup::LevelScheme& s,
                                         const semsup::FieldConfig& f, double wk) {
    using namespace semsup;
    literal::Input in;
    in.aux = s.auxiliary_ids();
    in.wk = wk;
    in.wb = f.omega_bar;
    in.Delta = s.main_omega() - (wk + f.omega_bar);
    for (int j : in.aux) in.D[j] = s.omega_between(j, s.main_lower) - wk;
    const double d12 = s.main_dipole();
    const double amp =
        consts::hbar * f.rabi_12 / (2.0 * d12 * std::sqrt(f.photon_number + 1.0));
    in.lam = [s, amp](int i, int j) {
        return literal::cplx(0.0, -1.0) * amp * s.dipole(i, j) / consts::hbar;
    };
    in.lamk = [s, d12](int i, int j) {
        return literal::cplx(0.0, -1.0) * s.dipole(i, j) / d12;
    };
    return in;
}
