#pragma once

#include <istream>
#include <string>
#include <vector>

namespace semsup {

struct Level {
    int id = 0;
    std::string label;
    double energy_ev = 0.0; // eV above the ground state
    int orbital_l = 0;      // orbital angular momentum, fixes parity (-1)^l
};

struct Transition {
    int upper = 0;
    int lower = 0;
    double gamma_hat = 0.0; // decay rate at the natural transition frequency, s^-1
    double dipole = 0.0;    // |d|, C m, derived from gamma_hat
    bool allowed = true;    // electric-dipole selection rule |dl| = 1
};

struct SelectionEntry {
    int upper = 0;
    int lower = 0;
    bool allowed = false;
    std::string reason; // empty when allowed
};

class LevelScheme {
public:
    std::vector<Level> levels;
    std::vector<Transition> transitions;
    int main_lower = 0; // |1>
    int main_upper = 0; // |2>

    void validate(); // checks invariants, fills dipoles + selection flags

    const Level& level(int id) const;
    bool has_level(int id) const;
    double omega(int id) const;                 // E_id / hbar, rad/s
    double omega_between(int i, int j) const;   // omega_i - omega_j
    double main_omega() const;                  // omega_21
    double main_gamma() const;                  // Gamma_hat on the main transition
    double main_dipole() const;

    // 0 when the pair has no listed transition or fails the selection rule
    double dipole(int i, int j) const;
    double gamma_hat(int i, int j) const;
    const Transition* find_transition(int i, int j) const; // unordered lookup

    bool pair_allowed(int i, int j) const; // |dl| == 1
    std::vector<int> auxiliary_ids() const; // all ids except main pair, ascending
    // unordered (hi, lo) pairs carrying a nonzero dipole, deterministic order
    std::vector<std::pair<int, int>> vacuum_pairs() const;
};

// d = sqrt(3 pi eps0 hbar c^3 gamma_hat / omega^3)
double dipole_from_decay_rate(double gamma_hat, double omega_ij);

std::vector<SelectionEntry> validate_selection_rules(const LevelScheme& scheme);

LevelScheme rubidium_scheme();
LevelScheme parse_level_scheme(std::istream& in, const std::string& name);
// builtin name ("rubidium") or a file path
LevelScheme load_level_scheme(const std::string& source);

} // namespace semsup
