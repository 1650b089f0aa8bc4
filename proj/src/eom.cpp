#include "semsup/eom.hpp"

#include <cassert>
#include <cmath>

#include "semsup/errors.hpp"

namespace semsup {

double gamma_at(const LevelScheme& scheme, std::pair<int, int> pair, double x) {
    if (x < 0.0)
        throw PhysicsError("gamma_at: negative evaluation frequency (omega + kappa*wbar < 0)");
    const double g = scheme.gamma_hat(pair.first, pair.second);
    if (g == 0.0) return 0.0;
    const double ratio = x / std::abs(scheme.omega_between(pair.first, pair.second));
    return g * ratio * ratio * ratio;
}

double interference_prefactor(double p, std::pair<int, int> a, std::pair<int, int> b) {
    if (a.first > a.second) std::swap(a.first, a.second);
    if (b.first > b.second) std::swap(b.first, b.second);
    return a == b ? 1.0 : p;
}

namespace {

// change in low-frequency photon number when the vertex acts on the absorption
// side (feeding E_n from the ground manifold)
int absorption_offset(VertexRole role) {
    switch (role) {
    case VertexRole::Alpha1: return +1; // b annihilates one low-frequency photon
    case VertexRole::Alpha2: return -1; // b^dagger
    case VertexRole::Beta4:  return +2; // b b
    case VertexRole::Beta3:  return -2; // b^dagger b^dagger
    default:                 return 0;  // alpha0, beta1*, beta2* (b^dagger b / b b^dagger)
    }
}

// sqrt-n freeze: b and b^dagger each contribute a factor sqrt(N)
double vertex_weight(VertexRole role, double N) {
    switch (role) {
    case VertexRole::Alpha0: return 1.0;
    case VertexRole::Alpha1:
    case VertexRole::Alpha2: return std::sqrt(N);
    default:                 return N;
    }
}

} // namespace

std::array<VertexFactor, 7> absorption_vertices() {
    const std::array<VertexRole, 7> roles = {
        VertexRole::Alpha0, VertexRole::Alpha1, VertexRole::Alpha2,
        VertexRole::Beta1,  VertexRole::Beta2,  VertexRole::Beta3,
        VertexRole::Beta4,
    };
    std::array<VertexFactor, 7> out{};
    for (size_t i = 0; i < roles.size(); ++i) {
        const int o = absorption_offset(roles[i]);
        out[i] = {roles[i], o, -o}; // explicit exponential e^{-i o wbar t}
    }
    return out;
}

std::vector<Pathway> enumerate_pathways() {
    const auto abs_side = absorption_vertices();
    std::vector<Pathway> out;
    out.reserve(49);
    for (const VertexFactor& e : abs_side) {
        // emission side is the Hermitian conjugate: offset and phase flip sign
        const VertexFactor emis{e.role, -e.fock_offset, -e.phase_multiple};
        for (const VertexFactor& a : abs_side) {
            Pathway p;
            p.emission = emis;
            p.absorption = a;
            p.total_offset = emis.fock_offset + a.fock_offset;
            p.pole_kappa = emis.fock_offset; // intermediate-amplitude phase
            // net phase multiple collapses to the e^{-i delta wbar t} of the
            // reduced EOM; anything else would be a bookkeeping bug
            assert(emis.phase_multiple + a.phase_multiple == -p.total_offset);
            out.push_back(p);
        }
    }
    return out;
}

int c_index(int delta) {
    switch (delta) {
    case 0:  return 0;
    case -1: return 1;
    case +1: return 2;
    case -2: return 3;
    case +2: return 4;
    case -3: return 5;
    case +3: return 6;
    case -4: return 7;
    case +4: return 8;
    }
    throw std::out_of_range("c_index: Fock offset outside [-4, 4]");
}

int c_offset(int index) {
    static const int table[9] = {0, -1, +1, -2, +2, -3, +3, -4, +4};
    return table[index];
}

std::vector<PathwayRecord> pathway_table(const LevelScheme& scheme,
                                         const FieldConfig& field) {
    LambdaSet lam(scheme, field);
    EffectiveCouplings base = evaluate_couplings(scheme, field, scheme.main_omega());
    const double omega = effective_frequency(scheme, base, field.photon_number);

    std::vector<PathwayRecord> out;
    for (const Pathway& p : enumerate_pathways()) {
        const double x = omega + p.pole_kappa * field.omega_bar;
        const auto emis = vertex_terms(p.emission.role, scheme, lam, x, field.omega_bar);
        const auto abs_terms =
            vertex_terms(p.absorption.role, scheme, lam, x, field.omega_bar);
        const double weight = vertex_weight(p.emission.role, field.photon_number) *
                              vertex_weight(p.absorption.role, field.photon_number);
        cplx kernel = 0.0;
        for (const VacuumTerm& a : abs_terms)
            for (const VacuumTerm& e : emis) {
                const double g =
                    0.5 * std::sqrt(gamma_at(scheme, a.pair, x) * gamma_at(scheme, e.pair, x));
                if (g == 0.0) continue;
                kernel += a.r * std::conj(e.r) *
                          interference_prefactor(field.interference_p, a.pair, e.pair) * g;
            }
        out.push_back({p, weight * kernel});
    }
    return out;
}

EOMCoefficients assemble_eom_coefficients(const LevelScheme& scheme,
                                          const FieldConfig& field, double rho) {
    EOMCoefficients out;
    out.omega_bar = field.omega_bar;
    out.rho = rho;

    EffectiveCouplings base = evaluate_couplings(scheme, field, scheme.main_omega());
    out.omega_eff = effective_frequency(scheme, base, field.photon_number);

    for (const PathwayRecord& r : pathway_table(scheme, field))
        out.c[c_index(r.path.total_offset)] += r.kernel;

    // driving: projection of H_b on the excited manifold keeps only alpha12
    out.d3 = rho * field.photon_number * std::conj(base.alpha[12]);
    out.d4 = rho * field.photon_number * base.alpha[12];
    return out;
}

const char* role_name(VertexRole role) {
    switch (role) {
    case VertexRole::Alpha0: return "alpha0";
    case VertexRole::Alpha1: return "alpha1";
    case VertexRole::Alpha2: return "alpha2";
    case VertexRole::Beta1:  return "beta1*";
    case VertexRole::Beta2:  return "beta2*";
    case VertexRole::Beta3:  return "beta3*";
    case VertexRole::Beta4:  return "beta4*";
    }
    return "?";
}

void write_pathway_csv(std::ostream& out, const std::vector<PathwayRecord>& table) {
    out << "emission,absorption,delta,kappa,kernel_re,kernel_im\n";
    char buf[64];
    for (const PathwayRecord& r : table) {
        out << role_name(r.path.emission.role) << ','
            << role_name(r.path.absorption.role) << ',' << r.path.total_offset << ','
            << r.path.pole_kappa << ',';
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", r.kernel.real(), r.kernel.imag());
        out << buf;
    }
}

} // namespace semsup
