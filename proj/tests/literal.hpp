#pragma once

// Independent literal transcription of the two- and three-photon coefficient
// formulas, used as an oracle against the coupling engine.  Deliberately kept
// free of any library types beyond std: coefficients are plain sums over
// auxiliary indices with user-supplied lambda maps.

#include <complex>
#include <functional>
#include <map>
#include <vector>

namespace literal {

using cplx = std::complex<double>;
using Lam = std::function<cplx(int, int)>; // symmetric in (i, j)

struct Input {
    std::vector<int> aux;    // auxiliary level ids (j, n run over these)
    Lam lam;                 // low-frequency lambda_ij
    Lam lamk;                // vacuum lambda_ijk at the evaluation frequency
    double Delta = 0.0;      // Delta = w2 - w1 - (wk + wbar)
    std::map<int, double> D; // Delta_j = w_j1 - wk (serves Delta_n too)
    double wk = 0.0;
    double wb = 0.0; // omega_bar
};

inline cplx alpha(int which, const Input& in) {
    const double Dl = in.Delta, wk = in.wk, wb = in.wb;
    const Lam& l = in.lam;
    const Lam& lk = in.lamk;
    auto C = [](cplx z) { return std::conj(z); };
    cplx s = 0.0;
    if (which == 0) return lk(1, 2);
    for (int j : in.aux) {
        const double Dj = in.D.at(j);
        switch (which) {
        case 1:
            s += l(2, j) * lk(j, 1) / (Dl - Dj) - l(2, j) * lk(j, 1) / Dj -
                 lk(2, j) * l(j, 1) / (Dj + wk - wb) +
                 lk(2, j) * l(j, 1) / (Dl - Dj - wk + wb);
            break;
        case 2:
            s += lk(j, 1) * C(l(2, j)) / (Dl - Dj) -
                 lk(j, 1) * C(l(2, j)) / (Dj - 2 * wb) +
                 lk(2, j) * C(l(j, 1)) / (Dl - Dj - wk - wb) -
                 lk(2, j) * C(l(j, 1)) / (Dj + wk - wb);
            break;
        case 3: s += -2.0 * lk(j, 1) * C(lk(1, j)) / Dj; break;
        case 4: s += -2.0 * lk(1, j) * C(lk(j, 1)) / (Dj + 2 * wk); break;
        case 5: s += -2.0 * l(j, 1) * C(l(1, j)) / (Dj + wk - wb); break;
        case 6: s += -2.0 * l(1, j) * C(l(j, 1)) / (Dj + wk + wb); break;
        case 7: s += 2.0 * lk(j, 2) * C(lk(2, j)) / (Dl - Dj + wk + wb); break;
        case 8: s += 2.0 * lk(2, j) * C(lk(j, 2)) / (Dl - Dj - wk + wb); break;
        case 9: s += 2.0 * l(j, 2) * C(l(2, j)) / (Dl - Dj + 2 * wb); break;
        case 10: s += 2.0 * l(2, j) * C(l(j, 2)) / (Dl - Dj); break;
        case 11:
            s += -l(1, j) * l(j, 1) / (Dj + wk - wb) -
                 l(1, j) * l(j, 1) / (Dj + wk + wb);
            break;
        case 12:
            s += l(2, j) * l(j, 2) / (Dl - Dj) +
                 l(2, j) * l(j, 2) / (Dl - Dj + 2 * wb);
            break;
        }
    }
    return s;
}

inline cplx beta(int which, const Input& in) {
    const double Dl = in.Delta, wk = in.wk, wb = in.wb;
    const Lam& l = in.lam;
    const Lam& lk = in.lamk;
    auto C = [](cplx z) { return std::conj(z); };
    cplx s = 0.0;
    for (int j : in.aux) {
        const double Dj = in.D.at(j);
        switch (which) {
        case 1:
            s += l(2, j) * C(lk(1, 2)) * C(l(j, 2)) / (Dj * (Dl - Dj + wb));
            s += l(1, 2) * C(lk(2, j)) * C(l(j, 2)) / (Dj * (Dl - Dj + wk + 2 * wb));
            s += l(2, j) * C(l(1, 2)) * C(lk(j, 2)) /
                 ((Dj + wk - wb) * (Dl - Dj + wb));
            s += l(2, 1) * C(lk(j, 1)) * C(l(j, 1)) /
                 ((Dl - Dj) * (Dj + wk + 2 * wb));
            s += l(j, 1) * C(l(2, 1)) * C(lk(j, 1)) /
                 ((Dl - Dj - wk - wb) * (Dj + 2 * wk + wb));
            s += l(j, 1) * C(lk(2, 1)) * C(l(j, 1)) /
                 ((Dl - Dj - wk - wb) * (Dj + wk + 2 * wb));
            break;
        case 2:
            s += l(j, 1) * C(l(2, 1)) * C(lk(j, 1)) / ((Dl - Dj) * (Dj + wk));
            s += l(j, 2) * C(lk(1, 2)) * C(l(2, j)) /
                 ((Dj - 2 * wb) * (Dl - Dj + 3 * wb));
            s += l(j, 1) * C(lk(2, 1)) * C(l(j, 1)) /
                 ((Dj + wk) * (Dl - Dj - wk + wb));
            s += l(2, 1) * C(lk(j, 1)) * C(l(j, 1)) /
                 ((Dl - Dj - wk + wb) * (Dj + 2 * wk + wb));
            s += l(j, 2) * C(l(1, 2)) * C(lk(2, j)) /
                 ((Dj - 2 * wb) * (Dl - Dj + wk + 2 * wb));
            s += l(1, 2) * C(l(2, j)) * C(lk(j, 2)) /
                 ((Dj + wk - wb) * (Dl - Dj + 3 * wb));
            break;
        case 3:
            s += l(2, 1) * l(j, 1) * C(lk(j, 1)) /
                 ((Dl - Dj) * (Dj + wk + 2 * wb));
            s += l(2, j) * l(j, 2) * C(lk(1, 2)) /
                 ((Dj - 2 * wb) * (Dl - Dj + 3 * wb));
            s += l(1, 2) * l(2, j) * C(lk(j, 2)) /
                 ((Dj + wk - wb) * (Dl - Dj + 3 * wb));
            s += C(lk(2, 1)) * l(j, 1) * l(j, 1) /
                 ((Dl - Dj - wk - wb) * (Dj + wk + 2 * wb));
            s += l(2, 1) * l(j, 1) * C(lk(j, 1)) /
                 ((Dl - Dj - wk - wb) * (Dj + 2 * wk + 3 * wb));
            s += l(1, 2) * l(j, 2) * C(lk(2, j)) /
                 ((Dj - 2 * wb) * (Dl - Dj + wk + 4 * wb));
            break;
        case 4:
            s += C(l(1, 2)) * C(lk(2, j)) * C(l(j, 2)) / (Dj * (Dl - Dj + wk));
            s += C(l(1, 2)) * C(l(2, j)) * C(lk(j, 2)) /
                 ((Dj + wk - wb) * (Dl - Dj + wb));
            s += C(l(2, 1)) * C(lk(j, 1)) * C(l(j, 1)) / ((Dl - Dj) * (Dj + wk));
            s += C(lk(1, 2)) * C(l(2, j)) * C(l(j, 2)) / (Dj * (Dl - Dj + wb));
            s += C(lk(2, 1)) * C(l(j, 1)) * C(l(j, 1)) /
                 ((Dj + wk) * (Dl - Dj - wk + wb));
            s += C(l(2, 1)) * C(lk(j, 1)) * C(l(j, 1)) /
                 ((Dj + 2 * wk - wb) * (Dl - Dj - wk + wb));
            break;
        }
        for (int n : in.aux) {
            const double Dn = in.D.at(n);
            switch (which) {
            case 1:
                s += l(1, j) * C(lk(j, n)) * C(l(n, 2)) / (Dn * (Dj + wk));
                s += l(j, n) * C(l(j, 2)) * C(lk(n, 1)) /
                     ((Dl - Dn) * (Dl - Dj - wb));
                s += l(n, 2) * C(lk(1, j)) * C(l(j, n)) /
                     ((Dn - 2 * wb) * (Dj - wb));
                s += l(1, j) * C(l(j, n)) * C(lk(n, 2)) /
                     ((Dj + wk) * (Dn + wk - wb));
                s += l(n, 1) * C(l(j, 2)) * C(lk(j, n)) /
                     ((Dl - Dj - wb) * (Dl - Dn - wk - wb));
                s += l(j, n) * C(lk(j, 2)) * C(l(n, 1)) /
                     ((Dl - Dj - wk) * (Dl - Dn - wk + wb));
                break;
            case 2:
                s += l(n, 2) * C(l(1, j)) * C(lk(j, n)) /
                     ((Dn - 2 * wb) * (Dj + wk - 2 * wb));
                s += l(j, n) * C(lk(1, j)) * C(l(n, 2)) / (Dn * (Dj - wb));
                s += l(n, 1) * C(lk(j, 2)) * C(l(j, n)) /
                     ((Dl - Dj - wk) * (Dl - Dn - wk - wb));
                s += l(j, 2) * C(l(j, n)) * C(lk(n, 1)) /
                     ((Dl - Dn) * (Dl - Dj + wb));
                s += l(j, n) * C(l(1, j)) * C(lk(n, 2)) /
                     ((Dj + wk - 2 * wb) * (Dn + wk - wb));
                s += l(j, 2) * C(lk(j, n)) * C(l(n, 1)) /
                     ((Dl - Dj + wb) * (Dl - Dn - wk + wb));
                break;
            case 3:
                s += l(j, n) * l(n, 2) * C(lk(1, j)) /
                     ((Dj - 3 * wb) * (Dn - 2 * wb));
                s += l(1, j) * l(n, 2) * C(lk(j, n)) /
                     ((Dn - 2 * wb) * (Dj + wk - 2 * wb));
                s += l(j, 2) * l(j, n) * C(lk(n, 1)) /
                     ((Dl - Dn) * (Dl - Dj - wb));
                s += l(j, n) * l(n, 1) * C(lk(j, 2)) /
                     ((Dl - Dj - wk - 2 * wb) * (Dl - Dn - wk - wb));
                s += l(j, 2) * l(n, 1) * C(lk(j, n)) /
                     ((Dl - Dj - wb) * (Dl - Dn - wk - wb));
                s += l(1, j) * l(j, n) * C(lk(n, 2)) /
                     ((Dj + wk - 2 * wb) * (Dn + wk - wb));
                break;
            case 4:
                s += C(l(1, j)) * C(l(j, n)) * C(lk(n, 2)) /
                     ((Dj + wk) * (Dn + wk - wb));
                s += C(l(j, 2)) * C(l(j, n)) * C(lk(n, 1)) /
                     ((Dl - Dn) * (Dl - Dj + wb));
                s += C(lk(1, j)) * C(l(j, n)) * C(l(n, 2)) / (Dn * (Dj + wb));
                s += C(l(1, j)) * C(lk(j, n)) * C(l(n, 2)) / (Dn * (Dj + wk));
                s += C(l(j, 2)) * C(lk(j, n)) * C(l(n, 1)) /
                     ((Dl - Dj + wb) * (Dl - Dn - wk + wb));
                s += C(lk(j, 2)) * C(l(j, n)) * C(l(n, 1)) /
                     ((Dl - Dn - wk + wb) * (Dl - Dj - wk + 2 * wb));
                break;
            }
        }
    }
    return s;
}

} // namespace literal
