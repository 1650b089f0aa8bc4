#include "semsup/levelscheme.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "semsup/constants.hpp"
#include "semsup/errors.hpp"

namespace semsup {

double dipole_from_decay_rate(double gamma_hat, double omega_ij) {
    if (omega_ij <= 0.0)
        throw PhysicsError("dipole_from_decay_rate: non-positive transition frequency");
    if (gamma_hat < 0.0)
        throw PhysicsError("dipole_from_decay_rate: negative decay rate");
    using namespace consts;
    const double d2 = 3.0 * M_PI * eps0 * hbar * c_light * c_light * c_light *
                      gamma_hat / (omega_ij * omega_ij * omega_ij);
    return std::sqrt(d2);
}

const Level& LevelScheme::level(int id) const {
    for (const auto& l : levels)
        if (l.id == id) return l;
    throw ConfigError("unknown level reference: " + std::to_string(id));
}

bool LevelScheme::has_level(int id) const {
    return std::any_of(levels.begin(), levels.end(),
                       [id](const Level& l) { return l.id == id; });
}

double LevelScheme::omega(int id) const {
    return level(id).energy_ev * consts::eV / consts::hbar;
}

double LevelScheme::omega_between(int i, int j) const {
    return omega(i) - omega(j);
}

double LevelScheme::main_omega() const {
    return omega_between(main_upper, main_lower);
}

double LevelScheme::main_gamma() const {
    return gamma_hat(main_upper, main_lower);
}

double LevelScheme::main_dipole() const {
    return dipole(main_upper, main_lower);
}

const Transition* LevelScheme::find_transition(int i, int j) const {
    for (const auto& t : transitions)
        if ((t.upper == i && t.lower == j) || (t.upper == j && t.lower == i))
            return &t;
    return nullptr;
}

bool LevelScheme::pair_allowed(int i, int j) const {
    return std::abs(level(i).orbital_l - level(j).orbital_l) == 1;
}

double LevelScheme::dipole(int i, int j) const {
    const Transition* t = find_transition(i, j);
    return (t && t->allowed) ? t->dipole : 0.0;
}

double LevelScheme::gamma_hat(int i, int j) const {
    const Transition* t = find_transition(i, j);
    return (t && t->allowed) ? t->gamma_hat : 0.0;
}

std::vector<int> LevelScheme::auxiliary_ids() const {
    std::vector<int> ids;
    for (const auto& l : levels)
        if (l.id != main_lower && l.id != main_upper) ids.push_back(l.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<std::pair<int, int>> LevelScheme::vacuum_pairs() const {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& t : transitions)
        if (t.allowed && t.dipole > 0.0)
            pairs.emplace_back(t.upper, t.lower);
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

void LevelScheme::validate() {
    if (levels.size() < 2) throw ConfigError("level scheme needs at least two levels");
    std::set<int> seen;
    for (const auto& l : levels) {
        if (!seen.insert(l.id).second)
            throw ConfigError("duplicate level id: " + std::to_string(l.id));
        if (l.energy_ev < 0.0)
            throw ConfigError("negative energy on level " + std::to_string(l.id));
        if (l.orbital_l < 0)
            throw ConfigError("negative orbital_l on level " + std::to_string(l.id));
    }
    if (!has_level(main_lower) || !has_level(main_upper) || main_lower == main_upper)
        throw ConfigError("missing main transition (main_upper/main_lower)");
    for (auto& t : transitions) {
        if (!has_level(t.upper) || !has_level(t.lower))
            throw ConfigError("unknown level reference in transition (" +
                              std::to_string(t.upper) + "," + std::to_string(t.lower) + ")");
        if (t.gamma_hat < 0.0)
            throw ConfigError("negative rate on transition (" + std::to_string(t.upper) +
                              "," + std::to_string(t.lower) + ")");
        if (level(t.upper).energy_ev <= level(t.lower).energy_ev)
            throw ConfigError("transition (" + std::to_string(t.upper) + "," +
                              std::to_string(t.lower) + ") is not downward in energy");
        t.allowed = pair_allowed(t.upper, t.lower);
        t.dipole = t.allowed
                       ? dipole_from_decay_rate(t.gamma_hat, omega_between(t.upper, t.lower))
                       : 0.0;
    }
    const Transition* main = find_transition(main_upper, main_lower);
    if (!main || !main->allowed || main->dipole <= 0.0)
        throw ConfigError("missing main transition (no dipole-allowed transition between "
                          "main_upper and main_lower)");
}

std::vector<SelectionEntry> validate_selection_rules(const LevelScheme& scheme) {
    std::vector<SelectionEntry> out;
    for (size_t a = 0; a < scheme.levels.size(); ++a)
        for (size_t b = a + 1; b < scheme.levels.size(); ++b) {
            const Level& hi = scheme.levels[a].energy_ev >= scheme.levels[b].energy_ev
                                  ? scheme.levels[a] : scheme.levels[b];
            const Level& lo = &hi == &scheme.levels[a] ? scheme.levels[b] : scheme.levels[a];
            SelectionEntry e;
            e.upper = hi.id;
            e.lower = lo.id;
            e.allowed = std::abs(hi.orbital_l - lo.orbital_l) == 1;
            if (!e.allowed) e.reason = "parity";
            out.push_back(e);
        }
    return out;
}

LevelScheme rubidium_scheme() {
    // Partial rubidium scheme: 5S_1/2 ground, 5P_3/2 excited (main transition),
    // six auxiliary states. Energies in eV; levels 5/6 split by 55 MHz.
    // orbital_l chosen so that every listed transition is dipole-allowed
    // (parity alternates along each transition).
    const double split56 = consts::h * 55.0e6 / consts::eV; // ~2.27e-7 eV
    LevelScheme s;
    s.levels = {
        {1, "5S_1/2", 0.0, 0},
        {2, "5P_3/2", 1.589, 1},
        {3, "6S_1/2", 2.496, 0},
        {4, "5P_1/2", 1.560, 1},
        {5, "4D_5/2", 2.400, 2},
        {6, "4D_3/2", 2.400 - split56, 2},
        {7, "6P_3/2", 2.940, 1},
        {8, "6P_1/2", 2.950, 1},
    };
    s.transitions = {
        {2, 1, 37.5e6}, {4, 1, 35.6e6}, {3, 2, 12.9e6}, {3, 4, 6.6e6},
        {5, 2, 2.0e6},  {5, 4, 10.7e6}, {6, 2, 11.9e6}, {7, 1, 2.4e6},
        {7, 3, 4.3e6},  {7, 5, 2.4e6},  {8, 1, 2.8e6},  {8, 3, 4.5e6},
        {8, 5, 0.2e6},  {8, 6, 1.7e6},
    };
    s.main_lower = 1;
    s.main_upper = 2;
    s.validate();
    return s;
}

namespace {

std::pair<std::string, std::string> split_kv(const std::string& line, const std::string& ctx) {
    auto eq = line.find('=');
    if (eq == std::string::npos)
        throw ConfigError(ctx + ": expected 'key = value', got '" + line + "'");
    auto trim = [](std::string s) {
        const char* ws = " \t\r";
        s.erase(0, s.find_first_not_of(ws));
        auto end = s.find_last_not_of(ws);
        s.erase(end == std::string::npos ? 0 : end + 1);
        return s;
    };
    return {trim(line.substr(0, eq)), trim(line.substr(eq + 1))};
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
    if (static_cast<double>(i) != d) throw ConfigError(ctx + ": expected integer, got '" + v + "'");
    return i;
}

} // namespace

LevelScheme parse_level_scheme(std::istream& in, const std::string& name) {
    LevelScheme s;
    std::string line, section;
    Level lvl;
    Transition tr;
    bool have_main_upper = false, have_main_lower = false;

    auto flush = [&]() {
        if (section == "level") s.levels.push_back(lvl);
        else if (section == "transition") s.transitions.push_back(tr);
        section.clear();
    };

    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string ctx = name + ":" + std::to_string(lineno);
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);

        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(ctx + ": malformed section header");
            flush();
            section = line.substr(1, line.size() - 2);
            if (section == "level") lvl = Level{};
            else if (section == "transition") tr = Transition{};
            else throw ConfigError(ctx + ": unknown section '" + section + "'");
            continue;
        }

        auto [key, value] = split_kv(line, ctx);
        if (key == "main_upper") { s.main_upper = to_int(value, ctx); have_main_upper = true; continue; }
        if (key == "main_lower") { s.main_lower = to_int(value, ctx); have_main_lower = true; continue; }
        if (section == "level") {
            if (key == "id") lvl.id = to_int(value, ctx);
            else if (key == "label") lvl.label = value;
            else if (key == "energy_eV") lvl.energy_ev = to_double(value, ctx);
            else if (key == "orbital_l") lvl.orbital_l = to_int(value, ctx);
            else throw ConfigError(ctx + ": unknown level key '" + key + "'");
        } else if (section == "transition") {
            if (key == "upper") tr.upper = to_int(value, ctx);
            else if (key == "lower") tr.lower = to_int(value, ctx);
            else if (key == "gamma_hat_per_s") tr.gamma_hat = to_double(value, ctx);
            else throw ConfigError(ctx + ": unknown transition key '" + key + "'");
        } else {
            throw ConfigError(ctx + ": unknown key '" + key + "'");
        }
    }
    flush();

    if (!have_main_upper || !have_main_lower)
        throw ConfigError(name + ": missing main transition (main_upper/main_lower)");
    s.validate();
    return s;
}

LevelScheme load_level_scheme(const std::string& source) {
    if (source == "rubidium") return rubidium_scheme();
    std::ifstream f(source);
    if (!f) throw ConfigError("cannot open level-scheme file '" + source + "'");
    return parse_level_scheme(f, source);
}

} // namespace semsup
