#pragma once

// Three interacting central qubits (XXZ exchange plus a z-axis DM term in a
// uniform field B) coupled uniformly to the chain with strength g.
//
// Computational basis index = 4 i1 + 2 i2 + i3 with bit value 0 meaning
// sigma^z = +1, so |000> is index 0 and |111> index 7.

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "spindec/chain_spectrum.hpp"
#include "spindec/decoherence.hpp"
#include "spindec/errors.hpp"
#include "spindec/hermitian_eigen.hpp"

namespace spindec {

struct CentralParams {
    double J = 1.0;     // exchange between central spins
    double Delta = 0.5; // z anisotropy
    double M = 0.5;     // z component of the DM vector between central spins
    double B = 1.0;     // field on the central spins
    double g = 0.05;    // uniform system-chain coupling
};

inline void validate(const CentralParams& p)
{
    if (!std::isfinite(p.J) || !std::isfinite(p.Delta) || !std::isfinite(p.M) || !std::isfinite(p.B) ||
        !std::isfinite(p.g))
        throw InvalidArgument("central parameters must be finite");
    if (p.g < 0.0) throw InvalidArgument("coupling g must be nonnegative");
}

using DensityMatrix8 = Matrix8;

// Levels E_0..E_7, ordered to match central_eigenbasis().
inline std::array<double, 8> eigen_energies(const CentralParams& p)
{
    const double s3 = std::sqrt(3.0);
    const double JM = p.J * p.M * s3;
    const double zz = 0.5 * p.J * p.Delta;
    return {3.0 * p.B + 3.0 * zz,
            -p.J - JM + p.B - zz,
            -p.J + JM + p.B - zz,
            2.0 * p.J - p.B - zz,
            2.0 * p.J + p.B - zz,
            -p.J + JM - p.B - zz,
            -p.J - JM - p.B - zz,
            -3.0 * p.B + 3.0 * zz};
}

// Eigenvalue of g (s1^z + s2^z + s3^z) on each level. Every level sits in a
// single magnetisation sector: (0,1,1,2,1,2,2,3) flipped spins.
inline std::array<double, 8> level_alphas(double g)
{
    if (g < 0.0 || !std::isfinite(g)) throw InvalidArgument("coupling g must be finite and nonnegative");
    return {3 * g, g, g, -g, g, -g, -g, -3 * g};
}

struct EigenLevel {
    int k = 0;
    double energy = 0.0;
    double alpha = 0.0;
    double lambda_k = 0.0; // chain field seen while the system sits in level k
};

inline std::array<EigenLevel, 8> eigen_levels(const CentralParams& p, double chain_lambda)
{
    const auto E = eigen_energies(p);
    const auto alpha = level_alphas(p.g);
    std::array<EigenLevel, 8> out;
    for (int k = 0; k < 8; ++k) out[k] = {k, E[k], alpha[k], chain_lambda + alpha[k]};
    return out;
}

// Columns are the eigenvectors |phi_k> of the central Hamiltonian. They do not
// depend on J, Delta, M or B.
inline Matrix8 central_eigenbasis()
{
    const auto e = [](int sixths) { return std::polar(1.0 / std::sqrt(3.0), sixths * std::numbers::pi / 6.0); };
    const double r3 = 1.0 / std::sqrt(3.0);
    Matrix8 V;
    V(0, 0) = 1.0;
    // one flipped spin: |001>=1, |010>=2, |100>=4
    V(1, 1) = e(1), V(2, 1) = e(5), V(4, 1) = e(9);
    V(1, 2) = e(5), V(2, 2) = e(1), V(4, 2) = e(9);
    V(1, 4) = r3, V(2, 4) = r3, V(4, 4) = r3;
    // two flipped spins: |011>=3, |101>=5, |110>=6
    V(3, 3) = r3, V(5, 3) = r3, V(6, 3) = r3;
    V(3, 5) = e(5), V(5, 5) = e(1), V(6, 5) = e(9);
    V(3, 6) = e(1), V(5, 6) = e(5), V(6, 6) = e(9);
    V(7, 7) = 1.0;
    return V;
}

namespace central_detail {

inline Matrix8 pauli_on(int qubit, const std::array<cplx, 4>& op)
{
    Matrix8 m;
    const int shift = 2 - qubit; // qubit 0 is the most significant bit
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) {
            if ((r & ~(1 << shift)) != (c & ~(1 << shift))) continue;
            const int br = (r >> shift) & 1, bc = (c >> shift) & 1;
            m(r, c) = op[2 * br + bc];
        }
    return m;
}

} // namespace central_detail

// Explicit 8x8 central Hamiltonian assembled from Pauli operators.
inline Matrix8 central_hamiltonian(const CentralParams& p)
{
    using central_detail::pauli_on;
    const std::array<cplx, 4> X{0.0, 1.0, 1.0, 0.0};
    const std::array<cplx, 4> Y{0.0, cplx(0, -1), cplx(0, 1), 0.0};
    const std::array<cplx, 4> Z{1.0, 0.0, 0.0, -1.0};
    const Matrix8 x[3] = {pauli_on(0, X), pauli_on(1, X), pauli_on(2, X)};
    const Matrix8 y[3] = {pauli_on(0, Y), pauli_on(1, Y), pauli_on(2, Y)};
    const Matrix8 z[3] = {pauli_on(0, Z), pauli_on(1, Z), pauli_on(2, Z)};

    Matrix8 exchange;
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
        exchange = exchange + x[i] * x[j] + y[i] * y[j] + cplx(p.Delta) * (z[i] * z[j]);
    // cyclic DM: (1,2), (2,3), (3,1)
    const Matrix8 dm = x[0] * y[1] - y[0] * x[1] + x[1] * y[2] - y[1] * x[2] + x[2] * y[0] - y[2] * x[0];
    return cplx(0.5 * p.J) * (exchange + cplx(p.M) * dm) + cplx(p.B) * (z[0] + z[1] + z[2]);
}

// a^2 |GHZ><GHZ| + (1 - a^2) |W><W|
inline DensityMatrix8 initial_density(double a)
{
    if (!(a >= 0.0 && a <= 1.0)) throw InvalidArgument("mixture weight a must lie in [0, 1]");
    const double ghz = 0.5 * a * a;
    const double w = (1.0 - a * a) / 3.0;
    DensityMatrix8 rho;
    rho(0, 0) = rho(7, 7) = rho(0, 7) = rho(7, 0) = ghz;
    for (int r : {1, 2, 4})
        for (int c : {1, 2, 4}) rho(r, c) = w;
    return rho;
}

// rho_S(t) for each time: in the eigenbasis, element (k,k') is multiplied by
// exp(-i (E_k - E_k') t) |F_kk'(t)|. Coherences whose eigenbasis weight is
// pure roundoff (< 1e-14) are left untouched.
inline std::vector<DensityMatrix8> evolve_density_series(const DensityMatrix8& rho0,
                                                         const std::vector<double>& times,
                                                         const CentralParams& p, const ChainParams& chain,
                                                         EnvPreparation prep)
{
    validate(p);
    validate(chain);
    detail::validate_times(times);
    const Matrix8 V = central_eigenbasis();
    const Matrix8 Vh = V.adjoint();
    Matrix8 rho_phi = Vh * rho0 * V;
    for (auto& v : rho_phi.a)
        if (std::abs(v) < 1e-14) v = 0.0;

    const auto E = eigen_energies(p);
    const auto alpha = level_alphas(p.g);

    // |F| is symmetric in (alpha_k, alpha_k'), so one series per unordered pair.
    std::map<std::pair<double, double>, std::vector<double>> factors;
    for (int k = 0; k < 8; ++k)
        for (int kp = 0; kp < 8; ++kp) {
            if (rho_phi(k, kp) == cplx(0.0) || alpha[k] == alpha[kp]) continue;
            const auto key = std::minmax(alpha[k], alpha[kp]);
            if (factors.contains(key)) continue;
            FactorRequest req{chain, chain.lambda + key.first, chain.lambda + key.second, prep, times, false};
            factors.emplace(key, decoherence_factor(req).magnitudes);
        }

    std::vector<DensityMatrix8> out;
    out.reserve(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        Matrix8 delta;
        bool any = false;
        for (int k = 0; k < 8; ++k)
            for (int kp = 0; kp < 8; ++kp) {
                if (k == kp || rho_phi(k, kp) == cplx(0.0)) continue;
                const double f = alpha[k] == alpha[kp]
                                     ? 1.0
                                     : factors.at(std::minmax(alpha[k], alpha[kp]))[i];
                const cplx m = std::polar(f, -(E[k] - E[kp]) * times[i]);
                if (m == cplx(1.0)) continue;
                delta(k, kp) = rho_phi(k, kp) * (m - 1.0);
                any = true;
            }
        if (!any) {
            out.push_back(rho0);
            continue;
        }
        Matrix8 rho = rho0 + V * delta * Vh;
        for (int r = 0; r < 8; ++r) {
            rho(r, r) = rho0(r, r);
            for (int c = r + 1; c < 8; ++c) {
                const cplx avg = 0.5 * (rho(r, c) + std::conj(rho(c, r)));
                rho(r, c) = avg;
                rho(c, r) = std::conj(avg);
            }
        }
        out.push_back(rho);
    }
    return out;
}

inline DensityMatrix8 evolve_density(const DensityMatrix8& rho0, double t, const CentralParams& p,
                                     const ChainParams& chain, EnvPreparation prep)
{
    return evolve_density_series(rho0, {t}, p, chain, prep).front();
}

} // namespace spindec
