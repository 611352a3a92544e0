#pragma once

// Genuine tripartite discord evaluated by brute force over product projective
// measurements on AB: T - J with J = S(rho_C) - min sum_ij p_ij S(rho_C|ij).
// The minimum is taken over a (theta, phi) grid for A and for B, so the result
// is an upper bound on the discord.

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "spindec/qcorr.hpp"

namespace testsupport {

using spindec::cplx;
using spindec::Matrix8;

inline double qubit_entropy(const std::array<cplx, 4>& s)
{
    // s = [s00, s01, s10, s11], trace 1
    const double z = s[0].real() - s[3].real();
    const double r = std::min(1.0, std::sqrt(z * z + 4.0 * std::norm(s[1])));
    double h = 0.0;
    for (double p : {0.5 * (1 + r), 0.5 * (1 - r)})
        if (p > 0) h -= p * std::log2(p);
    return h;
}

inline double discord_grid(const Matrix8& rho, int points = 64)
{
    struct Basis {
        std::array<std::array<cplx, 2>, 2> v;
    };
    std::vector<Basis> bases;
    for (int it = 0; it < points; ++it)
        for (int ip = 0; ip < points; ++ip) {
            const double th = std::numbers::pi * it / (points - 1);
            const double ph = 2.0 * std::numbers::pi * ip / points;
            const cplx e = std::polar(1.0, ph);
            Basis b;
            b.v[0] = {std::cos(th / 2), e * std::sin(th / 2)};
            b.v[1] = {-std::conj(e) * std::sin(th / 2), std::cos(th / 2)};
            bases.push_back(b);
            if (it == 0 || it == points - 1) break; // phase irrelevant at the poles
        }

    double best = std::numeric_limits<double>::infinity();
    for (const auto& A : bases) {
        // M_i(bc, b'c') = sum_{a,a'} conj(nA[a]) rho(abc, a'b'c') nA[a']
        std::array<std::array<cplx, 16>, 2> M{};
        for (int i = 0; i < 2; ++i)
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c)
                    for (int a = 0; a < 2; ++a)
                        for (int ap = 0; ap < 2; ++ap)
                            M[i][4 * r + c] += std::conj(A.v[i][a]) * rho(4 * a + r, 4 * ap + c) * A.v[i][ap];
        for (const auto& B : bases) {
            double cond = 0.0;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    std::array<cplx, 4> s{};
                    for (int c = 0; c < 2; ++c)
                        for (int cp = 0; cp < 2; ++cp)
                            for (int b = 0; b < 2; ++b)
                                for (int bp = 0; bp < 2; ++bp)
                                    s[2 * c + cp] += std::conj(B.v[j][b]) * M[i][4 * (2 * b + c) + 2 * bp + cp] *
                                                     B.v[j][bp];
                    const double p = s[0].real() + s[3].real();
                    if (p <= 1e-15) continue;
                    for (auto& x : s) x /= p;
                    cond += p * qubit_entropy(s);
                }
            best = std::min(best, cond);
        }
    }
    const double S_AB = spindec::von_neumann_entropy(spindec::reduced_AB(rho));
    const double S_ABC = spindec::von_neumann_entropy(rho);
    return S_AB - S_ABC + best;
}

} // namespace testsupport
