#include "semsup/oracle.hpp"

#include <cmath>

#include "semsup/errors.hpp"
#include "semsup/ode.hpp"

namespace semsup {

VacuumModeGrid discretize_vacuum(double gamma_hat, double center, double half_width,
                                 int mode_count) {
    if (mode_count < 3 || mode_count % 2 == 0)
        throw ConfigError("oracle mode_count must be odd and >= 3");
    if (half_width <= 0.0) throw ConfigError("oracle half_width must be positive");
    VacuumModeGrid g;
    g.center = center;
    g.half_width = half_width;
    g.mode_count = mode_count;
    g.spacing = 2.0 * half_width / (mode_count - 1);
    g.coupling = std::sqrt(gamma_hat * g.spacing / (2.0 * M_PI));
    return g;
}

namespace {

// exact vertex factor feeding E_n (b acts on the low-frequency mode)
double exact_weight(VertexRole role, double n) {
    switch (role) {
    case VertexRole::Alpha0: return 1.0;
    case VertexRole::Alpha1: return std::sqrt(n + 1.0);          // b
    case VertexRole::Alpha2: return std::sqrt(n);                // b+
    case VertexRole::Beta1:  return n + 1.0;                     // b b+
    case VertexRole::Beta2:  return n;                           // b+ b
    case VertexRole::Beta3:  return std::sqrt(n * (n - 1.0));    // b+ b+
    case VertexRole::Beta4:  return std::sqrt((n + 1.0) * (n + 2.0)); // b b
    }
    return 0.0;
}

double frozen_weight(VertexRole role, double N) {
    switch (role) {
    case VertexRole::Alpha0: return 1.0;
    case VertexRole::Alpha1:
    case VertexRole::Alpha2: return std::sqrt(N);
    default:                 return N;
    }
}

} // namespace

FullTrace integrate_full(const LevelScheme& scheme, const SimulationConfig& config,
                         const VacuumModeGrid& grid, bool freeze_sqrt_n) {
    const long long L = 2LL * config.delta_n + 1;
    const long long M = grid.mode_count;
    if (L * (M + 1) > 1000000LL)
        throw OracleSizeError("oracle instance too large: (2*delta_n+1)*(M+1) > 1e6");
    if (config.t_max <= 0.0) throw ConfigError("t_max must be positive");

    const double wbar = config.field.omega_bar;
    const double N = config.field.photon_number;
    LambdaSet lam(scheme, config.field);
    const double d12 = scheme.main_dipole();

    // Stark-shifted transition frequency; the alpha combination is omega_k-free
    EffectiveCouplings base = evaluate_couplings(scheme, config.field, grid.center);
    const double omega = effective_frequency(scheme, base, N);

    // per-mode, per-role vacuum coupling V[r][k] = sum_t r_t * lambda_rs,k
    // with lambda_rs,k = -i g d_rs / d_12 (flat golden-rule-calibrated grid)
    const std::array<VertexFactor, 7> roles = absorption_vertices();
    std::vector<std::vector<cplx>> V(7, std::vector<cplx>(M, cplx(0.0)));
    std::vector<double> omega_k(M);
    std::vector<char> active(7, 0);
    for (long long k = 0; k < M; ++k) {
        omega_k[k] = grid.center + (static_cast<double>(k) - (M - 1) / 2.0) * grid.spacing;
        for (int r = 0; r < 7; ++r) {
            cplx sum = 0.0;
            for (const VacuumTerm& t :
                 vertex_terms(roles[r].role, scheme, lam, omega_k[k], wbar))
                sum += t.r * cplx(0.0, -1.0) * grid.coupling *
                       scheme.dipole(t.pair.first, t.pair.second) / d12;
            V[r][k] = sum;
            if (sum != cplx(0.0)) active[r] = 1;
        }
    }

    // vertex factors per Fock row
    AmplitudeVector init = prepare_coherent_state(N, config.field.phase, config.cutoff_w,
                                                  config.delta_n);
    std::vector<std::vector<double>> W(7, std::vector<double>(L));
    for (long long n = 0; n < L; ++n) {
        const double abs_n = static_cast<double>(init.offset + n);
        for (int r = 0; r < 7; ++r)
            W[r][n] = freeze_sqrt_n ? frozen_weight(roles[r].role, N)
                                    : exact_weight(roles[r].role, abs_n);
    }

    // driving coefficients (frozen-N form, matching the reduced model); the
    // ground-manifold counterpart alpha11 is kept so H stays the full H_b
    const cplx d3 = config.rho * N * std::conj(base.alpha[12]);
    const cplx d4 = config.rho * N * base.alpha[12];
    const cplx d3g = config.rho * N * std::conj(base.alpha[11]);
    const cplx d4g = config.rho * N * base.alpha[11];

    // state layout: y[0..L-1] = E_n, y[L + n*M + k] = G_n^k
    std::vector<cplx> y(L * (M + 1), cplx(0.0));
    for (long long n = 0; n < L; ++n) y[n] = init.values[n];

    std::vector<cplx> mode_phase(M);
    const cplx I(0.0, 1.0);

    auto rhs = [&](double t, const std::vector<cplx>& s, std::vector<cplx>& ds) {
        std::fill(ds.begin(), ds.end(), cplx(0.0));
        for (long long k = 0; k < M; ++k)
            mode_phase[k] = std::polar(1.0, (omega - omega_k[k]) * t);
        const cplx* E = s.data();
        const cplx* G = s.data() + L;
        cplx* dE = ds.data();
        cplx* dG = ds.data() + L;
        for (int r = 0; r < 7; ++r) {
            if (!active[r]) continue;
            const int o = roles[r].fock_offset;
            const cplx ph = std::polar(1.0, -static_cast<double>(o) * wbar * t);
            const cplx* Vr = V[r].data();
            const double* Wr = W[r].data();
            for (long long n = 0; n < L; ++n) {
                const long long m = n + o;
                if (m < 0 || m >= L || Wr[n] == 0.0) continue;
                const cplx* Gm = G + m * M;
                cplx* dGm = dG + m * M;
                const cplx c0 = -I * Wr[n] * ph;
                cplx acc = 0.0;
                for (long long k = 0; k < M; ++k) {
                    const cplx v = Vr[k] * mode_phase[k];
                    acc += v * Gm[k];
                    dGm[k] += -I * std::conj(Wr[n] * ph * v) * E[n]; // h.c. row
                }
                dE[n] += c0 * acc;
            }
        }
        // bichromatic driving, excited and ground manifolds
        const cplx p2 = std::polar(1.0, 2.0 * wbar * t);
        const cplx e3 = -I * d3 * p2, e4 = -I * d4 * std::conj(p2);
        const cplx g3 = -I * d3g * p2, g4 = -I * d4g * std::conj(p2);
        for (long long n = 0; n < L; ++n) {
            if (n >= 2) dE[n] += e3 * E[n - 2];
            if (n + 2 < L) dE[n] += e4 * E[n + 2];
        }
        if (d3g != cplx(0.0))
            for (long long n = 0; n < L; ++n) {
                cplx* dGn = dG + n * M;
                if (n >= 2) {
                    const cplx* Glo = G + (n - 2) * M;
                    for (long long k = 0; k < M; ++k) dGn[k] += g3 * Glo[k];
                }
                if (n + 2 < L) {
                    const cplx* Ghi = G + (n + 2) * M;
                    for (long long k = 0; k < M; ++k) dGn[k] += g4 * Ghi[k];
                }
            }
    };

    std::vector<double> samples(config.output_points);
    for (int i = 0; i < config.output_points; ++i)
        samples[i] = config.t_max * static_cast<double>(i) /
                     static_cast<double>(config.output_points - 1);

    FullTrace out;
    const double gamma_ref = scheme.main_gamma();
    auto observe = [&](double t, const std::vector<cplx>& s) {
        double pi = 0.0, norm = 0.0;
        for (long long n = 0; n < L; ++n) pi += std::norm(s[n]);
        for (size_t i = 0; i < s.size(); ++i) norm += std::norm(s[i]);
        out.trace.times.push_back(t);
        out.trace.pi.push_back(pi);
        out.trace.reference.push_back(std::exp(-gamma_ref * t));
        out.norm.push_back(norm);
    };
    integrate_dopri5(rhs, y, 0.0, samples, config.rel_tol, 1e-14, observe);
    return out;
}

CompareReport compare_traces(const PopulationTrace& a, const PopulationTrace& b,
                             double abs_tol, double rel_tol) {
    if (a.times.empty() || a.times.size() != b.times.size())
        throw ConfigError("compare_traces: traces have different time grids");
    CompareReport rep;
    for (size_t i = 0; i < a.times.size(); ++i) {
        if (std::abs(a.times[i] - b.times[i]) >
            1e-9 * std::max(std::abs(a.times.back()), 1e-300))
            throw ConfigError("compare_traces: traces have different time grids");
        const double da = std::abs(a.pi[i] - b.pi[i]);
        const double dr = da / std::max(std::max(std::abs(a.pi[i]), std::abs(b.pi[i])),
                                        1e-300);
        if (da > rep.max_abs) { rep.max_abs = da; rep.t_at_abs = a.times[i]; }
        if (dr > rep.max_rel) { rep.max_rel = dr; rep.t_at_rel = a.times[i]; }
    }
    rep.pass = rep.max_abs <= abs_tol || rep.max_rel <= rel_tol;
    return rep;
}

} // namespace semsup
