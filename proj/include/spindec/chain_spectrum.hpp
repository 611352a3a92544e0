#pragma once

// Momentum-space quantities of the transverse-field XY chain with a
// Dzyaloshinskii-Moriya term, after Jordan-Wigner, Fourier and Bogoliubov
// transformations. Everything here is a pure function of its arguments.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>

#include "spindec/errors.hpp"

namespace spindec {

struct ChainParams {
    int N = 400;         // number of chain spins, even and >= 4
    double gamma = 0.5;  // XY anisotropy
    double lambda = 1.0; // transverse field
    double D = 0.0;      // DM strength
};

inline void validate(const ChainParams& p)
{
    if (p.N < 4 || p.N % 2 != 0)
        throw InvalidArgument("chain size N must be even and >= 4, got " + std::to_string(p.N));
    if (!std::isfinite(p.gamma) || !std::isfinite(p.lambda) || !std::isfinite(p.D))
        throw InvalidArgument("chain parameters must be finite");
}

// Number of paired modes j = 1..L. The unpaired momenta j = 0 and j = N/2
// carry no pairing term and only contribute a phase to the overlap.
constexpr int paired_mode_count(int N) noexcept { return N / 2 - 1; }

struct ModeIndex {
    int j = 1;
};

inline void validate(ModeIndex m, const ChainParams& p)
{
    const int L = paired_mode_count(p.N);
    if (m.j < 1 || m.j > L)
        throw InvalidArgument("mode index " + std::to_string(m.j) + " outside [1, " +
                              std::to_string(L) + "]");
}

inline double momentum(ModeIndex m, int N) noexcept
{
    return 2.0 * std::numbers::pi * m.j / N;
}

// alpha_k for the computational basis state |k> of R central spins, bit j of k
// (most significant first) selecting +g_j for 0 and -g_j for 1.
inline double alpha_of_bitstring(std::uint64_t k, std::span<const double> couplings)
{
    const std::size_t R = couplings.size();
    if (R == 0 || R >= 64 || k >= (std::uint64_t{1} << R))
        throw InvalidArgument("bitstring index " + std::to_string(k) + " out of range for R = " +
                              std::to_string(R));
    double alpha = 0.0;
    for (std::size_t i = 0; i < R; ++i) {
        const bool bit = (k >> (R - 1 - i)) & 1u;
        alpha += bit ? -couplings[i] : couplings[i];
    }
    return alpha;
}

inline double single_particle_energy(ModeIndex m, double lambda_k, const ChainParams& p)
{
    validate(m, p);
    const double q = momentum(m, p.N);
    return std::hypot(lambda_k - std::cos(q), p.gamma * std::sin(q));
}

// Quasiparticle energy of mode +j. Can be negative for large |D|.
inline double mode_energy(ModeIndex m, double lambda_k, const ChainParams& p)
{
    const double eps = single_particle_energy(m, lambda_k, p);
    return 2.0 * (eps + 2.0 * p.D * std::sin(momentum(m, p.N)));
}

// Phase rate of the paired (j, -j) sector: (Lambda_j + Lambda_{-j}) / 2.
// The DM contributions of +j and -j cancel here, so this is 2 * epsilon.
inline double pair_energy(ModeIndex m, double lambda_k, const ChainParams& p)
{
    return 2.0 * single_particle_energy(m, lambda_k, p);
}

// Bogoliubov angle, two-argument form: sin(theta) = gamma sin q / eps and
// cos(theta) = (lambda_k - cos q) / eps. Range (-pi, pi].
inline double bogoliubov_angle(ModeIndex m, double lambda_k, const ChainParams& p)
{
    validate(m, p);
    const double q = momentum(m, p.N);
    const double y = p.gamma * std::sin(q);
    const double x = lambda_k - std::cos(q);
    if (x == 0.0 && y == 0.0)
        throw DegenerateMode("epsilon = 0 at j = " + std::to_string(m.j) +
                             ", lambda_k = " + std::to_string(lambda_k));
    return std::atan2(y, x);
}

// Half the angle between the Bogoliubov rotations at lambda_k and at the bare field.
inline double delta_angle(ModeIndex m, double lambda_k, const ChainParams& p)
{
    return 0.5 * (bogoliubov_angle(m, lambda_k, p) - bogoliubov_angle(m, p.lambda, p));
}

struct ModeSpectrum {
    double theta = 0.0;    // Bogoliubov angle at lambda_k
    double epsilon = 0.0;  // single-particle energy, >= 0
    double Lambda = 0.0;   // quasiparticle energy of +j, includes DM
    double vartheta = 0.0; // (theta(lambda_k) - theta(lambda)) / 2
};

inline ModeSpectrum mode_spectrum(ModeIndex m, double lambda_k, const ChainParams& p)
{
    ModeSpectrum s;
    s.theta = bogoliubov_angle(m, lambda_k, p);
    s.epsilon = single_particle_energy(m, lambda_k, p);
    s.Lambda = 2.0 * (s.epsilon + 2.0 * p.D * std::sin(momentum(m, p.N)));
    s.vartheta = 0.5 * (s.theta - bogoliubov_angle(m, p.lambda, p));
    return s;
}

} // namespace spindec
