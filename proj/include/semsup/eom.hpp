#pragma once

#include <array>
#include <ostream>
#include <vector>

#include "semsup/couplings.hpp"

namespace semsup {

// Gamma_ij(x) = Gamma_hat_ij * (x / omega_ij)^3 for the unordered pair (i, j)
double gamma_at(const LevelScheme& scheme, std::pair<int, int> pair, double x);

// p^{xy}_{rs}: 1 for the same unordered transition, the configured scalar otherwise
double interference_prefactor(double p, std::pair<int, int> a, std::pair<int, int> b);

// One factor of the vacuum-interaction operator.  fock_offset is the change in
// low-frequency photon number across the vertex; on the absorption side the
// coefficient of E_n picks up e^{i phase_multiple wbar t}.
struct VertexFactor {
    VertexRole role;
    int fock_offset = 0;
    int phase_multiple = 0;
};

// Ordered (emission, absorption) vertex pair of the second-order decay kernel.
struct Pathway {
    VertexFactor emission;
    VertexFactor absorption;
    int total_offset = 0; // delta: c_delta couples E_n to E_{n+delta}
    int pole_kappa = 0;   // kernel evaluated at omega + kappa * wbar
};

// The 7 absorption-side vertex factors in fixed order
// {alpha0, alpha1, alpha2, beta1*, beta2*, beta3*, beta4*}.
std::array<VertexFactor, 7> absorption_vertices();

// All 49 ordered (emission, absorption) pairs, deterministic order.  The net
// phase multiple of each pathway satisfies mu + nu = -delta (the coefficient
// of E_{n+delta} carries e^{-i delta wbar t}).
std::vector<Pathway> enumerate_pathways();

// index into EOMCoefficients::c for a given Fock offset delta in [-4, 4]
int c_index(int delta);
// inverse map: Fock offset for c_i
int c_offset(int index);

struct EOMCoefficients {
    std::array<cplx, 9> c{};  // c0..c8, s^-1
    cplx d3{}, d4{};          // driving coefficients, s^-1 (already rho-scaled)
    double omega_eff = 0.0;   // Stark-shifted transition frequency, rad/s
    double omega_bar = 0.0;   // rad/s
    double rho = 1.0;
};

// Wigner-Weisskopf assembly: sum the 49 pathway kernels at their poles.
EOMCoefficients assemble_eom_coefficients(const LevelScheme& scheme,
                                          const FieldConfig& field, double rho);

const char* role_name(VertexRole role);

struct PathwayRecord {
    Pathway path;
    cplx kernel; // contribution to c_{delta}, s^-1
};

std::vector<PathwayRecord> pathway_table(const LevelScheme& scheme,
                                         const FieldConfig& field);

// CSV audit dump: emission vertex, absorption vertex, delta, kappa, kernel
void write_pathway_csv(std::ostream& out, const std::vector<PathwayRecord>& table);

} // namespace semsup
