#pragma once

#include <array>
#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "semsup/levelscheme.hpp"

namespace semsup {

using cplx = std::complex<double>;

struct FieldConfig {
    double omega_bar = 1e5;      // rad/s, low-frequency field
    double rabi_12 = 1e13;       // rad/s, Rabi frequency on the main transition
    double photon_number = 1e6;  // N
    double phase = 0.0;          // phi of the initial coherent state
    double interference_p = 1.0; // p in [-1, 1]
};

struct Detunings {
    double big_delta = 0.0;          // Delta = w2 - w1 - (w_k + wbar)
    std::map<int, double> delta_j;   // Delta_j = w_j1 - w_k (same family serves Delta_n)
};

Detunings detunings(const LevelScheme& scheme, double omega_k, double omega_bar);

// -i * amplitude * dipole * overlap / hbar
cplx lambda_coupling(double dipole, double field_amplitude, double overlap);

// Low-frequency couplings, all derived from rabi_12:
// field amplitude E = hbar * Omega_12 / (2 d_12 sqrt(N+1)), lambda_ij = -i E d_ij / hbar.
class LambdaSet {
public:
    LambdaSet(const LevelScheme& scheme, const FieldConfig& field);
    cplx low(int i, int j) const; // 0 for forbidden/absent pairs
    double amplitude() const { return amplitude_; }

private:
    const LevelScheme* scheme_;
    double amplitude_;
};

// One addend group of an absorption-side vacuum-vertex coefficient:
// coefficient = sum_t r_t * lambda_{rs,k}.  pair is the unordered vacuum transition.
struct VacuumTerm {
    std::pair<int, int> pair; // (lo, hi) level ids
    cplx r;                   // dimensionless prefactor at the evaluation frequency
};

enum class VertexRole { Alpha0, Alpha1, Alpha2, Beta1, Beta2, Beta3, Beta4 };

// Decomposition of the absorption-side coefficient
// {alpha0, alpha1, alpha2, beta1*, beta2*, beta3*, beta4*} at vacuum frequency omega_k.
std::vector<VacuumTerm> vertex_terms(VertexRole role, const LevelScheme& scheme,
                                     const LambdaSet& lam, double omega_k,
                                     double omega_bar);

struct EffectiveCouplings {
    std::array<cplx, 13> alpha{}; // alpha[0..12]
    std::array<cplx, 5> beta{};   // beta[1..4]; beta[0] unused
    double omega_k = 0.0;
};

// vac_amplitude scales the vacuum lambda convention: lambda_rsk = -i * vac_amplitude * d_rs/d_12.
// The default 1.0 is the dimensionless unit-vacuum-amplitude convention.
EffectiveCouplings evaluate_couplings(const LevelScheme& scheme, const FieldConfig& field,
                                      double omega_k, double vac_amplitude = 1.0);

// omega = w2 - w1 + N*(alpha9 + alpha10 - alpha5 - alpha6); the combination is
// omega_k-free, so any evaluation frequency gives the same shift.
double effective_frequency(const LevelScheme& scheme, const EffectiveCouplings& cs, double N);

double rabi_frequency(cplx lambda, double n);

// small-denominator guard threshold
double denominator_floor(const LevelScheme& scheme);

} // namespace semsup
