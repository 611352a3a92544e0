#pragma once

// Brute-force check of the per-mode decoherence factors. The quadratic fermion
// Hamiltonian is restricted to the momenta (+j, -j) and written out as a 4x4
// matrix in the occupation basis, then propagated exactly. Nothing here reuses
// the closed-form expressions in decoherence.hpp.
//
// Basis order: |0 0>, |1 0>, |0 1>, |1 1> with the first slot for d_j and
// |n_j n_-j> = (d_j^+)^n_j (d_-j^+)^n_-j |vac>.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "spindec/chain_spectrum.hpp"
#include "spindec/decoherence.hpp"

namespace spindec {

using cplx = std::complex<double>;

struct PairedModeHamiltonian {
    std::array<std::array<cplx, 4>, 4> h{};

    const cplx& operator()(int r, int c) const { return h[r][c]; }
    cplx& operator()(int r, int c) { return h[r][c]; }
};

using PairedModeState = std::array<cplx, 4>;

namespace oracle_detail {

using Op4 = std::array<std::array<cplx, 4>, 4>;

inline Op4 multiply(const Op4& a, const Op4& b)
{
    Op4 r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

inline Op4 adjoint(const Op4& a)
{
    Op4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = std::conj(a[j][i]);
    return r;
}

// Annihilators with a Jordan-Wigner string: d_j acts on bit 0, d_-j on bit 1
// and picks up (-1)^{n_j}.
inline Op4 annihilator(int slot)
{
    Op4 r{};
    for (int s = 0; s < 4; ++s) {
        if (!((s >> slot) & 1)) continue;
        const int target = s & ~(1 << slot);
        const double sign = (slot == 1 && (s & 1)) ? -1.0 : 1.0;
        r[target][s] = sign;
    }
    return r;
}

// exp(-i H t) applied to a 2-vector, H Hermitian 2x2: H = h0 I + h.sigma.
inline std::array<cplx, 2> evolve2(cplx a, cplx b, cplx d, double t, cplx x0, cplx x1)
{
    const double h0 = 0.5 * (a.real() + d.real());
    const double hz = 0.5 * (a.real() - d.real());
    const double hx = b.real();
    const double hy = -b.imag();
    const double norm = std::sqrt(hx * hx + hy * hy + hz * hz);
    const cplx global = std::polar(1.0, -h0 * t);
    if (norm == 0.0) return {global * x0, global * x1};
    const double cs = std::cos(norm * t);
    const double sn = std::sin(norm * t) / norm;
    const cplx I(0.0, 1.0);
    // exp(-i n.sigma phi) = cos phi - i sin phi (n.sigma); (h.sigma) = [[hz, hx - i hy], [hx + i hy, -hz]]
    const cplx u00 = cs - I * sn * hz;
    const cplx u01 = -I * sn * cplx(hx, -hy);
    const cplx u10 = -I * sn * cplx(hx, hy);
    const cplx u11 = cs + I * sn * hz;
    return {global * (u00 * x0 + u01 * x1), global * (u10 * x0 + u11 * x1)};
}

} // namespace oracle_detail

// The (+j, -j) restriction of the momentum-space chain Hamiltonian, constants
// dropped. Built term by term from fermion operators.
inline PairedModeHamiltonian build_mode_hamiltonian(ModeIndex m, double lambda_k, const ChainParams& p)
{
    validate(p);
    validate(m, p);
    using namespace oracle_detail;
    const Op4 d[2] = {annihilator(0), annihilator(1)}; // d_j, d_-j
    const Op4 dd[2] = {adjoint(d[0]), adjoint(d[1])};
    const cplx I(0.0, 1.0);

    Op4 h{};
    for (int sgn : {+1, -1}) {
        const int self = sgn > 0 ? 0 : 1;
        const int other = 1 - self;
        const double q = 2.0 * std::numbers::pi * (sgn * m.j) / p.N;
        // -[ -i gamma sin q (d_-q d_q + d_-q^+ d_q^+) + (2(cos q - lambda_k) + 4 D sin q) d_q^+ d_q ]
        const Op4 pair = multiply(d[other], d[self]);
        const Op4 pair_dag = multiply(dd[other], dd[self]);
        const Op4 number = multiply(dd[self], d[self]);
        const cplx pair_coeff = I * p.gamma * std::sin(q);
        const double num_coeff = -(2.0 * (std::cos(q) - lambda_k) + 4.0 * p.D * std::sin(q));
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                h[r][c] += pair_coeff * (pair[r][c] + pair_dag[r][c]) + num_coeff * number[r][c];
    }
    PairedModeHamiltonian out;
    out.h = h;
    return out;
}

inline double hermiticity_residual(const PairedModeHamiltonian& h)
{
    double worst = 0.0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) worst = std::max(worst, std::abs(h(r, c) - std::conj(h(c, r))));
    return worst;
}

// Largest coupling between the even {|00>,|11>} and odd {|10>,|01>} sectors.
inline double parity_mixing(const PairedModeHamiltonian& h)
{
    constexpr int even[2] = {0, 3};
    constexpr int odd[2] = {1, 2};
    double worst = 0.0;
    for (int e : even)
        for (int o : odd) worst = std::max({worst, std::abs(h(e, o)), std::abs(h(o, e))});
    return worst;
}

// exp(-i H t) |psi>, using closed-form 2x2 exponentials on each parity block.
inline PairedModeState evolve_paired_state(const PairedModeHamiltonian& h, const PairedModeState& psi,
                                           double t)
{
    const auto even = oracle_detail::evolve2(h(0, 0), h(0, 3), h(3, 3), t, psi[0], psi[3]);
    const auto odd = oracle_detail::evolve2(h(1, 1), h(1, 2), h(2, 2), t, psi[1], psi[2]);
    return {even[0], odd[0], odd[1], even[1]};
}

inline PairedModeState initial_mode_state(ModeIndex m, EnvPreparation prep, const ChainParams& p)
{
    if (prep == EnvPreparation::Vacuum) return {cplx(1.0), cplx(0.0), cplx(0.0), cplx(0.0)};
    const double theta = bogoliubov_angle(m, p.lambda, p);
    return {cplx(std::cos(0.5 * theta)), cplx(0.0), cplx(0.0), cplx(0.0, std::sin(0.5 * theta))};
}

// <psi_j| exp(+i H' t) exp(-i H t) |psi_j> with H at lambda_k and H' at lambda_k'.
inline cplx mode_factor_bruteforce(ModeIndex m, double lambda_k, double lambda_kp, double t,
                                   const ChainParams& p, EnvPreparation prep)
{
    const auto psi = initial_mode_state(m, prep, p);
    const auto a = evolve_paired_state(build_mode_hamiltonian(m, lambda_k, p), psi, t);
    const auto b = evolve_paired_state(build_mode_hamiltonian(m, lambda_kp, p), psi, t);
    cplx overlap = 0.0;
    for (int s = 0; s < 4; ++s) overlap += std::conj(b[s]) * a[s];
    return overlap;
}

// Random comparison of the closed-form per-mode factors against the propagator.

struct OracleDraw {
    ChainParams chain;
    int j = 1;
    double lambda_k = 0.0;
    double lambda_kp = 0.0;
    double t = 0.0;
};

inline std::string describe(const OracleDraw& d)
{
    std::ostringstream os;
    os.precision(17);
    os << "N=" << d.chain.N << " j=" << d.j << " gamma=" << d.chain.gamma
       << " lambda=" << d.chain.lambda << " D=" << d.chain.D << " lambda_k=" << d.lambda_k
       << " lambda_kp=" << d.lambda_kp << " t=" << d.t;
    return os.str();
}

struct OracleWorst {
    double deviation = 0.0;
    std::optional<OracleDraw> draw;
};

struct OracleReport {
    std::size_t draws = 0;
    OracleWorst ground;
    OracleWorst vacuum;

    bool passed(double tol = 1e-10) const
    {
        return ground.deviation < tol && vacuum.deviation < tol;
    }
};

// Draws N in {8, 12, 16}, gamma in [0,1], lambda in [0.5,2], D in [0,1],
// lambda_k, lambda_k' in [-2,4], t in [0,5] and a mode j in [1, L].
// `perturb` scales the closed-form modulus by (1 + perturb): a negative control.
inline OracleReport run_oracle_comparison(std::uint64_t seed, std::size_t draws, double perturb = 0.0)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };
    constexpr int sizes[3] = {8, 12, 16};

    OracleReport report;
    report.draws = draws;
    for (std::size_t n = 0; n < draws; ++n) {
        OracleDraw d;
        d.chain.N = sizes[static_cast<int>(unit(rng) * 3) % 3];
        d.chain.gamma = uniform(0.0, 1.0);
        d.chain.lambda = uniform(0.5, 2.0);
        d.chain.D = uniform(0.0, 1.0);
        d.lambda_k = uniform(-2.0, 4.0);
        d.lambda_kp = uniform(-2.0, 4.0);
        d.t = uniform(0.0, 5.0);
        const int L = paired_mode_count(d.chain.N);
        d.j = 1 + static_cast<int>(unit(rng) * L) % L;

        const ModeIndex m{d.j};
        for (auto prep : {EnvPreparation::Ground, EnvPreparation::Vacuum}) {
            const double brute = std::abs(mode_factor_bruteforce(m, d.lambda_k, d.lambda_kp, d.t, d.chain, prep));
            double closed = prep == EnvPreparation::Ground
                                ? std::abs(ground_mode_amplitude(m, d.lambda_k, d.lambda_kp, d.t, d.chain))
                                : vacuum_mode_magnitude(m, d.lambda_k, d.lambda_kp, d.t, d.chain);
            closed *= 1.0 + perturb;
            const double dev = std::abs(brute - closed);
            auto& worst = prep == EnvPreparation::Ground ? report.ground : report.vacuum;
            if (!worst.draw || dev > worst.deviation) {
                worst.deviation = dev;
                worst.draw = d;
            }
        }
    }
    return report;
}

} // namespace spindec
