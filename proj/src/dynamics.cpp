#include "semsup/dynamics.hpp"

#include <cmath>
#include <limits>

#include "semsup/errors.hpp"
#include "semsup/ode.hpp"

namespace semsup {

AmplitudeVector prepare_coherent_state(double photon_number, double phi, int cutoff_w,
                                       int delta_n) {
    if (cutoff_w <= 0 || cutoff_w >= delta_n)
        throw ConfigError("cutoff_w must satisfy 0 < W < delta_n");
    const long long N = std::llround(photon_number);
    if (N - delta_n < 0)
        throw ConfigError("photon_number - delta_n must be non-negative");

    AmplitudeVector state;
    state.offset = N - delta_n;
    state.values.assign(2 * static_cast<size_t>(delta_n) + 1, cplx(0.0));

    // log |alpha^n / sqrt(n!)| up to a common constant; the constant drops out
    // in the renormalization, so overflow is impossible.
    const double log_alpha = 0.5 * std::log(photon_number);
    std::vector<double> logw(2 * cutoff_w + 1);
    double logw_max = -std::numeric_limits<double>::infinity();
    for (int m = -cutoff_w; m <= cutoff_w; ++m) {
        const double n = static_cast<double>(N + m);
        const double lw = n * log_alpha - 0.5 * std::lgamma(n + 1.0);
        logw[m + cutoff_w] = lw;
        logw_max = std::max(logw_max, lw);
    }
    double norm2 = 0.0;
    for (double& lw : logw) {
        lw = std::exp(lw - logw_max);
        norm2 += lw * lw;
    }
    const double inv_norm = 1.0 / std::sqrt(norm2);
    const double two_pi = 2.0 * M_PI;
    for (int m = -cutoff_w; m <= cutoff_w; ++m) {
        const double n = static_cast<double>(N + m);
        state.values[(N + m) - state.offset] =
            std::polar(logw[m + cutoff_w] * inv_norm, std::fmod(n * phi, two_pi));
    }
    return state;
}

void eval_rhs(double t, const EOMCoefficients& coeffs, const std::vector<cplx>& y,
              std::vector<cplx>& dy) {
    const long long L = static_cast<long long>(y.size());
    std::fill(dy.begin(), dy.end(), cplx(0.0));
    const cplx i(0.0, 1.0);
    for (int idx = 0; idx < 9; ++idx) {
        const int delta = c_offset(idx);
        cplx base = coeffs.c[idx];
        if (delta == -2) base += i * coeffs.d3;
        if (delta == +2) base += i * coeffs.d4;
        if (base == cplx(0.0)) continue;
        // coefficient of E_{n+delta} carries e^{-i delta wbar t}
        const cplx coef =
            -base * std::polar(1.0, -static_cast<double>(delta) * coeffs.omega_bar * t);
        const long long lo = std::max(0LL, -static_cast<long long>(delta));
        const long long hi = std::min(L, L - delta);
        const cplx* src = y.data() + delta;
        cplx* dst = dy.data();
        for (long long n = lo; n < hi; ++n) dst[n] += coef * src[n];
    }
}

double population(const AmplitudeVector& state) {
    double sum = 0.0;
    for (const cplx& e : state.values) sum += std::norm(e);
    return sum;
}

PopulationTrace integrate(const SimulationConfig& config, const EOMCoefficients& coeffs,
                          AmplitudeVector state, double gamma_ref) {
    if (config.t_max <= 0.0) throw ConfigError("t_max must be positive");
    if (config.rel_tol <= 0.0) throw ConfigError("rel_tol must be positive");
    if (config.output_points < 2) throw ConfigError("output_points must be at least 2");

    std::vector<double> samples(config.output_points);
    for (int k = 0; k < config.output_points; ++k)
        samples[k] = config.t_max * static_cast<double>(k) /
                     static_cast<double>(config.output_points - 1);

    PopulationTrace trace;
    trace.times.reserve(samples.size());
    trace.pi.reserve(samples.size());
    trace.reference.reserve(samples.size());

    AmplitudeVector probe; // reused wrapper for population()
    probe.offset = state.offset;
    auto rhs = [&coeffs](double t, const std::vector<cplx>& y, std::vector<cplx>& dy) {
        eval_rhs(t, coeffs, y, dy);
    };
    auto observe = [&](double t, const std::vector<cplx>& y) {
        probe.values = y;
        trace.times.push_back(t);
        trace.pi.push_back(population(probe));
        trace.reference.push_back(std::exp(-gamma_ref * t));
    };
    integrate_dopri5(rhs, state.values, 0.0, samples, config.rel_tol, 1e-14, observe);
    return trace;
}

PopulationTrace run_simulation(const LevelScheme& scheme, const SimulationConfig& config) {
    SimulationConfig cfg = config;
    if (cfg.t_max <= 0.0) cfg.t_max = 4.0 / scheme.main_gamma();
    EOMCoefficients coeffs = assemble_eom_coefficients(scheme, cfg.field, cfg.rho);
    AmplitudeVector state = prepare_coherent_state(cfg.field.photon_number,
                                                   cfg.field.phase, cfg.cutoff_w,
                                                   cfg.delta_n);
    return integrate(cfg, coeffs, std::move(state), scheme.main_gamma());
}

double trapping_metric(const PopulationTrace& trace, double gamma_hat) {
    const size_t n = trace.times.size();
    if (n < 2 || trace.pi.size() != n)
        throw ConfigError("trapping_metric: malformed trace");
    const double target = std::exp(-1.0);
    for (size_t i = 1; i < n; ++i) {
        if (trace.pi[i] > target) continue;
        // log-linear interpolation between the bracketing samples
        const double p0 = std::max(trace.pi[i - 1], 1e-300);
        const double p1 = std::max(trace.pi[i], 1e-300);
        double t = trace.times[i];
        if (p0 > p1)
            t = trace.times[i - 1] + (trace.times[i] - trace.times[i - 1]) *
                                         (std::log(p0) + 1.0) / (std::log(p0) - std::log(p1));
        return t * gamma_hat;
    }
    return std::numeric_limits<double>::infinity();
}

} // namespace semsup
