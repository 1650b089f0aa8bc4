#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "semsup/errors.hpp"

namespace semsup {

// Adaptive Dormand-Prince 5(4) for large complex systems.
//
// rhs(t, y, dy) fills dy; observe(t, y) is called at every requested sample
// time (samples must be ascending, samples.front() >= t0).  Steps are clamped
// so every sample time is hit exactly; FSAL reuses the last stage.
template <typename Rhs, typename Observe>
void integrate_dopri5(Rhs&& rhs, std::vector<std::complex<double>>& y, double t0,
                      const std::vector<double>& samples, double rel_tol,
                      double abs_tol, Observe&& observe) {
    using vec = std::vector<std::complex<double>>;
    const size_t n = y.size();
    if (samples.empty()) return;

    // Butcher tableau (Dormand & Prince 1980)
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                        a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    // b - b_hat (error weights)
    static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    vec k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n);
    double t = t0;
    rhs(t, y, k1);

    double t_end = samples.back();
    double h = (t_end - t0) / 1e4; // conservative first guess, controller adapts fast
    if (h <= 0.0) h = 1.0;
    size_t next_sample = 0;
    // emit samples that coincide with t0
    while (next_sample < samples.size() && samples[next_sample] <= t) {
        observe(samples[next_sample], y);
        ++next_sample;
    }

    double err_prev = 1.0;
    const double safety = 0.9, min_scale = 0.2, max_scale = 6.0;

    while (next_sample < samples.size()) {
        const double target = samples[next_sample];
        bool hit = false;
        if (t + h >= target) {
            h = target - t;
            hit = true;
        }
        if (!(h > 0.0) || t + h == t)
            throw IntegratorError("step-size underflow at t = " + std::to_string(t) + " s");

        for (size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
        rhs(t + c2 * h, ytmp, k2);
        for (size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * h, ytmp, k3);
        for (size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * h, ytmp, k4);
        for (size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * h, ytmp, k5);
        for (size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                                  a65 * k5[i]);
        rhs(t + h, ytmp, k6);
        for (size_t i = 0; i < n; ++i)
            ynew[i] = y[i] +
                      h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        rhs(t + h, ynew, k7); // FSAL stage

        // scaled RMS error norm
        double err = 0.0;
        for (size_t i = 0; i < n; ++i) {
            const std::complex<double> de =
                h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                     e7 * k7[i]);
            const double sc =
                abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            const double r = std::abs(de) / sc;
            err += r * r;
        }
        err = std::sqrt(err / static_cast<double>(n));

        if (err <= 1.0) {
            t += h;
            y.swap(ynew);
            k1.swap(k7);
            if (hit && t == target) {
                observe(t, y);
                ++next_sample;
                // duplicates in the sample list
                while (next_sample < samples.size() && samples[next_sample] <= t) {
                    observe(samples[next_sample], y);
                    ++next_sample;
                }
            }
            // PI controller (Gustafsson)
            double scale = safety * std::pow(err > 0 ? err : 1e-10, -0.7 / 5.0) *
                           std::pow(err_prev, 0.4 / 5.0);
            scale = std::clamp(scale, min_scale, max_scale);
            h *= scale;
            err_prev = std::max(err, 1e-4);
        } else {
            double scale = std::max(safety * std::pow(err, -1.0 / 5.0), min_scale);
            h *= scale;
        }
    }
}

} // namespace semsup
