#include "semsup/couplings.hpp"

#include <cmath>

#include "semsup/constants.hpp"
#include "semsup/errors.hpp"

namespace semsup {

double denominator_floor(const LevelScheme& scheme) {
    return 1e-6 * scheme.main_omega();
}

Detunings detunings(const LevelScheme& scheme, double omega_k, double omega_bar) {
    Detunings d;
    d.big_delta = scheme.main_omega() - (omega_k + omega_bar);
    for (int j : scheme.auxiliary_ids())
        d.delta_j[j] = scheme.omega_between(j, scheme.main_lower) - omega_k;
    return d;
}

cplx lambda_coupling(double dipole, double field_amplitude, double overlap) {
    return cplx(0.0, -1.0) * field_amplitude * dipole * overlap / consts::hbar;
}

LambdaSet::LambdaSet(const LevelScheme& scheme, const FieldConfig& field)
    : scheme_(&scheme) {
    const double d12 = scheme.main_dipole();
    amplitude_ = consts::hbar * field.rabi_12 /
                 (2.0 * d12 * std::sqrt(field.photon_number + 1.0));
}

cplx LambdaSet::low(int i, int j) const {
    return lambda_coupling(scheme_->dipole(i, j), amplitude_, 1.0);
}

namespace {

// Shared evaluation context for the printed alpha/beta addends.
struct Ctx {
    const LevelScheme& s;
    const LambdaSet& lam;
    double w;       // omega_k
    double u;       // omega_bar
    double D;       // big Delta
    std::map<int, double> Dj;
    double eps_den;
    int m1, m2;     // main lower/upper ids

    Ctx(const LevelScheme& scheme, const LambdaSet& l, double omega_k, double omega_bar)
        : s(scheme), lam(l), w(omega_k), u(omega_bar) {
        Detunings d = detunings(scheme, omega_k, omega_bar);
        D = d.big_delta;
        Dj = std::move(d.delta_j);
        eps_den = denominator_floor(scheme);
        m1 = scheme.main_lower;
        m2 = scheme.main_upper;
    }

    cplx L(int i, int j) const { return lam.low(i, j); }
    double dj(int j) const { return Dj.at(j); }

    double inv(double den) const {
        if (std::abs(den) < eps_den)
            throw PhysicsError("small-denominator: auxiliary state too close to resonance "
                               "(|den| < 1e-6 * omega_21)");
        return 1.0 / den;
    }

    bool vac_ok(int a, int b) const { return s.dipole(a, b) > 0.0; }
    static std::pair<int, int> norm_pair(int a, int b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    }
};

} // namespace

std::vector<VacuumTerm> vertex_terms(VertexRole role, const LevelScheme& scheme,
                                     const LambdaSet& lam, double omega_k,
                                     double omega_bar) {
    Ctx c(scheme, lam, omega_k, omega_bar);
    std::vector<VacuumTerm> terms;

    // Denominators are inverted only for addends that actually contribute
    // (nonzero low-frequency numerator AND allowed vacuum pair), so forbidden
    // pathways contribute exactly zero and can never trip the resonance guard.
    //
    // alpha-type roles enter the absorption side directly.  beta_m enters as
    // beta_m^*; the printed beta_m addend carries lambda*_rsk, so its remaining
    // factor is conjugated here to give the lambda_rsk decomposition.
    auto add_a = [&](int va, int vb, cplx num, double den) {
        if (num == cplx(0.0) || !c.vac_ok(va, vb)) return;
        terms.push_back({Ctx::norm_pair(va, vb), num * c.inv(den)});
    };
    auto add_b = [&](int va, int vb, cplx num, double den1, double den2) {
        if (num == cplx(0.0) || !c.vac_ok(va, vb)) return;
        terms.push_back({Ctx::norm_pair(va, vb),
                         std::conj(num * c.inv(den1) * c.inv(den2))});
    };

    const double D = c.D, w = c.w, u = c.u;
    const int m1 = c.m1, m2 = c.m2;
    auto L = [&](int i, int j) { return c.L(i, j); };
    auto Lc = [&](int i, int j) { return std::conj(c.L(i, j)); };

    switch (role) {
    case VertexRole::Alpha0:
        if (c.vac_ok(m1, m2))
            terms.push_back({Ctx::norm_pair(m1, m2), cplx(1.0, 0.0)});
        break;

    case VertexRole::Alpha1:
        for (int j : scheme.auxiliary_ids()) {
            const double Dj = c.dj(j);
            add_a(j, m1, L(m2, j), D - Dj);
            add_a(j, m1, -L(m2, j), Dj);
            add_a(m2, j, -L(j, m1), Dj + w - u);
            add_a(m2, j, L(j, m1), D - Dj - w + u);
        }
        break;

    case VertexRole::Alpha2:
        for (int j : scheme.auxiliary_ids()) {
            const double Dj = c.dj(j);
            add_a(j, m1, Lc(m2, j), D - Dj);
            add_a(j, m1, -Lc(m2, j), Dj - 2 * u);
            add_a(m2, j, Lc(j, m1), D - Dj - w - u);
            add_a(m2, j, -Lc(j, m1), Dj + w - u);
        }
        break;

    case VertexRole::Beta1:
        for (int j : scheme.auxiliary_ids()) {
            const double Dj = c.dj(j);
            add_b(m1, m2, L(m2, j) * Lc(j, m2), Dj, D - Dj + u);
            add_b(m2, j, L(m1, m2) * Lc(j, m2), Dj, D - Dj + w + 2 * u);
            add_b(j, m2, L(m2, j) * Lc(m1, m2), Dj + w - u, D - Dj + u);
            add_b(j, m1, L(m2, m1) * Lc(j, m1), D - Dj, Dj + w + 2 * u);
            add_b(j, m1, L(j, m1) * Lc(m2, m1), D - Dj - w - u, Dj + 2 * w + u);
            add_b(m2, m1, L(j, m1) * Lc(j, m1), D - Dj - w - u, Dj + w + 2 * u);
            for (int n : scheme.auxiliary_ids()) {
                const double Dn = c.dj(n);
                add_b(j, n, L(m1, j) * Lc(n, m2), Dn, Dj + w);
                add_b(n, m1, L(j, n) * Lc(j, m2), D - Dn, D - Dj - u);
                add_b(m1, j, L(n, m2) * Lc(j, n), Dn - 2 * u, Dj - u);
                add_b(n, m2, L(m1, j) * Lc(j, n), Dj + w, Dn + w - u);
                add_b(j, n, L(n, m1) * Lc(j, m2), D - Dj - u, D - Dn - w - u);
                add_b(j, m2, L(j, n) * Lc(n, m1), D - Dj - w, D - Dn - w + u);
            }
        }
        break;

    case VertexRole::Beta2:
        for (int j : scheme.auxiliary_ids()) {
            const double Dj = c.dj(j);
            add_b(j, m1, L(j, m1) * Lc(m2, m1), D - Dj, Dj + w);
            add_b(m1, m2, L(j, m2) * Lc(m2, j), Dj - 2 * u, D - Dj + 3 * u);
            add_b(m2, m1, L(j, m1) * Lc(j, m1), Dj + w, D - Dj - w + u);
            add_b(j, m1, L(m2, m1) * Lc(j, m1), D - Dj - w + u, Dj + 2 * w + u);
            add_b(m2, j, L(j, m2) * Lc(m1, m2), Dj - 2 * u, D - Dj + w + 2 * u);
            add_b(j, m2, L(m1, m2) * Lc(m2, j), Dj + w - u, D - Dj + 3 * u);
            for (int n : scheme.auxiliary_ids()) {
                const double Dn = c.dj(n);
                add_b(j, n, L(n, m2) * Lc(m1, j), Dn - 2 * u, Dj + w - 2 * u);
                add_b(m1, j, L(j, n) * Lc(n, m2), Dn, Dj - u);
                add_b(j, m2, L(n, m1) * Lc(j, n), D - Dj - w, D - Dn - w - u);
                add_b(n, m1, L(j, m2) * Lc(j, n), D - Dn, D - Dj + u);
                add_b(n, m2, L(j, n) * Lc(m1, j), Dj + w - 2 * u, Dn + w - u);
                add_b(j, n, L(j, m2) * Lc(n, m1), D - Dj + u, D - Dn - w + u);
            }
        }
        break;

    case VertexRole::Beta3:
        for (int j : scheme.auxiliary_ids()) {
            const double Dj = c.dj(j);
            add_b(j, m1, L(m2, m1) * L(j, m1), D - Dj, Dj + w + 2 * u);
            add_b(m1, m2, L(m2, j) * L(j, m2), Dj - 2 * u, D - Dj + 3 * u);
            add_b(j, m2, L(m1, m2) * L(m2, j), Dj + w - u, D - Dj + 3 * u);
            add_b(m2, m1, L(j, m1) * L(j, m1), D - Dj - w - u, Dj + w + 2 * u);
            add_b(j, m1, L(m2, m1) * L(j, m1), D - Dj - w - u, Dj + 2 * w + 3 * u);
            add_b(m2, j, L(m1, m2) * L(j, m2), Dj - 2 * u, D - Dj + w + 4 * u);
            for (int n : scheme.auxiliary_ids()) {
                const double Dn = c.dj(n);
                add_b(m1, j, L(j, n) * L(n, m2), Dj - 3 * u, Dn - 2 * u);
                add_b(j, n, L(m1, j) * L(n, m2), Dn - 2 * u, Dj + w - 2 * u);
                add_b(n, m1, L(j, m2) * L(j, n), D - Dn, D - Dj - u);
                add_b(j, m2, L(j, n) * L(n, m1), D - Dj - w - 2 * u, D - Dn - w - u);
                add_b(j, n, L(j, m2) * L(n, m1), D - Dj - u, D - Dn - w - u);
                add_b(n, m2, L(m1, j) * L(j, n), Dj + w - 2 * u, Dn + w - u);
            }
        }
        break;

    case VertexRole::Beta4:
        for (int j : scheme.auxiliary_ids()) {
            const double Dj = c.dj(j);
            add_b(m2, j, Lc(m1, m2) * Lc(j, m2), Dj, D - Dj + w);
            add_b(j, m2, Lc(m1, m2) * Lc(m2, j), Dj + w - u, D - Dj + u);
            add_b(j, m1, Lc(m2, m1) * Lc(j, m1), D - Dj, Dj + w);
            add_b(m1, m2, Lc(m2, j) * Lc(j, m2), Dj, D - Dj + u);
            add_b(m2, m1, Lc(j, m1) * Lc(j, m1), Dj + w, D - Dj - w + u);
            add_b(j, m1, Lc(m2, m1) * Lc(j, m1), Dj + 2 * w - u, D - Dj - w + u);
            for (int n : scheme.auxiliary_ids()) {
                const double Dn = c.dj(n);
                add_b(n, m2, Lc(m1, j) * Lc(j, n), Dj + w, Dn + w - u);
                add_b(n, m1, Lc(j, m2) * Lc(j, n), D - Dn, D - Dj + u);
                add_b(m1, j, Lc(j, n) * Lc(n, m2), Dn, Dj + u);
                add_b(j, n, Lc(m1, j) * Lc(n, m2), Dn, Dj + w);
                add_b(j, n, Lc(j, m2) * Lc(n, m1), D - Dj + u, D - Dn - w + u);
                add_b(j, m2, Lc(j, n) * Lc(n, m1), D - Dn - w + u, D - Dj - w + 2 * u);
            }
        }
        break;
    }
    return terms;
}

EffectiveCouplings evaluate_couplings(const LevelScheme& scheme, const FieldConfig& field,
                                      double omega_k, double vac_amplitude) {
    LambdaSet lam(scheme, field);
    Ctx c(scheme, lam, omega_k, field.omega_bar);
    const double d12 = scheme.main_dipole();
    auto vac = [&](int i, int j) {
        return cplx(0.0, -1.0) * vac_amplitude * scheme.dipole(i, j) / d12;
    };

    EffectiveCouplings out;
    out.omega_k = omega_k;

    // alpha0..2 and beta1..4 from the vertex decompositions
    auto assemble = [&](VertexRole role) {
        cplx sum = 0.0;
        for (const auto& t : vertex_terms(role, scheme, lam, omega_k, field.omega_bar))
            sum += t.r * vac(t.pair.first, t.pair.second);
        return sum;
    };
    out.alpha[0] = assemble(VertexRole::Alpha0);
    out.alpha[1] = assemble(VertexRole::Alpha1);
    out.alpha[2] = assemble(VertexRole::Alpha2);
    // beta_m = conj(value of the beta_m^* decomposition)
    out.beta[1] = std::conj(assemble(VertexRole::Beta1));
    out.beta[2] = std::conj(assemble(VertexRole::Beta2));
    out.beta[3] = std::conj(assemble(VertexRole::Beta3));
    out.beta[4] = std::conj(assemble(VertexRole::Beta4));

    // Stark-type coefficients (direct literal sums)
    const double D = c.D, w = omega_k, u = field.omega_bar;
    const int m1 = c.m1, m2 = c.m2;
    for (int j : scheme.auxiliary_ids()) {
        const double Dj = c.dj(j);
        cplx num;
        if ((num = vac(j, m1) * std::conj(vac(m1, j))) != cplx(0.0)) {
            out.alpha[3] += -2.0 * num * c.inv(Dj);
            out.alpha[4] += -2.0 * std::conj(num) * c.inv(Dj + 2 * w);
        }
        if ((num = lam.low(j, m1) * std::conj(lam.low(m1, j))) != cplx(0.0)) {
            out.alpha[5] += -2.0 * num * c.inv(Dj + w - u);
            out.alpha[6] += -2.0 * std::conj(num) * c.inv(Dj + w + u);
        }
        if ((num = vac(j, m2) * std::conj(vac(m2, j))) != cplx(0.0)) {
            out.alpha[7] += 2.0 * num * c.inv(D - Dj + w + u);
            out.alpha[8] += 2.0 * std::conj(num) * c.inv(D - Dj - w + u);
        }
        if ((num = lam.low(j, m2) * std::conj(lam.low(m2, j))) != cplx(0.0)) {
            out.alpha[9] += 2.0 * num * c.inv(D - Dj + 2 * u);
            out.alpha[10] += 2.0 * std::conj(num) * c.inv(D - Dj);
        }
        if ((num = lam.low(m1, j) * lam.low(j, m1)) != cplx(0.0)) {
            out.alpha[11] += -num * c.inv(Dj + w - u);
            out.alpha[11] += -num * c.inv(Dj + w + u);
        }
        if ((num = lam.low(m2, j) * lam.low(j, m2)) != cplx(0.0)) {
            out.alpha[12] += num * c.inv(D - Dj);
            out.alpha[12] += num * c.inv(D - Dj + 2 * u);
        }
    }
    return out;
}

double effective_frequency(const LevelScheme& scheme, const EffectiveCouplings& cs, double N) {
    const cplx shift = N * (cs.alpha[9] + cs.alpha[10] - cs.alpha[5] - cs.alpha[6]);
    const double eps = 1e-12 * scheme.main_omega();
    if (std::abs(shift.imag()) > 1e-6 * std::abs(shift.real()) + eps)
        throw PhysicsError("effective_frequency: Stark shift has a non-negligible "
                           "imaginary part");
    return scheme.main_omega() + shift.real();
}

double rabi_frequency(cplx lambda, double n) {
    return 2.0 * std::abs(lambda) * std::sqrt(n + 1.0);
}

} // namespace semsup
