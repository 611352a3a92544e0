#pragma once

// Closed-form approximations of |F_kk'(t)| in the weak- and strong-coupling
// regimes, for both environment preparations. Only the final approximations
// are exposed; each regime function takes the eigenvalues alpha_k, alpha_k'
// of the coupling operator and the chain parameters.

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "spindec/chain_spectrum.hpp"
#include "spindec/decoherence.hpp"
#include "spindec/errors.hpp"

namespace spindec {

enum class HeuristicRegime {
    GroundWeakCritical,
    GroundWeakFar,
    GroundStrongOpposite,
    GroundStrongSame,
    VacuumStrong,
    VacuumWeakCritical,
    VacuumWeakFar,
};

inline constexpr HeuristicRegime all_regimes[] = {
    HeuristicRegime::GroundWeakCritical, HeuristicRegime::GroundWeakFar,
    HeuristicRegime::GroundStrongOpposite, HeuristicRegime::GroundStrongSame,
    HeuristicRegime::VacuumStrong, HeuristicRegime::VacuumWeakCritical,
    HeuristicRegime::VacuumWeakFar,
};

inline std::string_view to_string(HeuristicRegime r)
{
    switch (r) {
    case HeuristicRegime::GroundWeakCritical: return "GroundWeakCritical";
    case HeuristicRegime::GroundWeakFar: return "GroundWeakFar";
    case HeuristicRegime::GroundStrongOpposite: return "GroundStrongOpposite";
    case HeuristicRegime::GroundStrongSame: return "GroundStrongSame";
    case HeuristicRegime::VacuumStrong: return "VacuumStrong";
    case HeuristicRegime::VacuumWeakCritical: return "VacuumWeakCritical";
    case HeuristicRegime::VacuumWeakFar: return "VacuumWeakFar";
    }
    return "?";
}

inline std::optional<HeuristicRegime> parse_regime(std::string_view name)
{
    for (auto r : all_regimes)
        if (to_string(r) == name) return r;
    return std::nullopt;
}

inline EnvPreparation preparation_of(HeuristicRegime r)
{
    switch (r) {
    case HeuristicRegime::GroundWeakCritical:
    case HeuristicRegime::GroundWeakFar:
    case HeuristicRegime::GroundStrongOpposite:
    case HeuristicRegime::GroundStrongSame: return EnvPreparation::Ground;
    default: return EnvPreparation::Vacuum;
    }
}

inline int default_cutoff(int N) { return paired_mode_count(N); }

// E^(i)(Kc) = sum_{j=1}^{Kc} (2 pi j / N)^i
inline double cutoff_sum(int order, int Kc, int N)
{
    if (order < 1) throw InvalidArgument("cutoff_sum order must be >= 1");
    if (N < 4 || Kc < 1 || Kc > paired_mode_count(N))
        throw InvalidArgument("cutoff Kc = " + std::to_string(Kc) + " outside [1, N/2 - 1]");
    double sum = 0.0;
    for (int j = 1; j <= Kc; ++j) sum += std::pow(2.0 * std::numbers::pi * j / N, order);
    return sum;
}

namespace heuristics_detail {

inline double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

inline void require_nonzero(double alpha_k, double alpha_kp)
{
    if (alpha_k == 0.0 || alpha_kp == 0.0) throw ZeroAlpha("alpha_k and alpha_k' must be nonzero");
}

inline double distance_to_critical(const ChainParams& p)
{
    const double d = p.lambda - 1.0;
    if (std::abs(d) <= 1e-12) throw SingularField("approximation is singular at lambda = 1");
    return d;
}

} // namespace heuristics_detail

struct TauPair {
    double first = 0.0;
    double second = 0.0;
};

struct TauTriple {
    double first = 0.0;
    double second = 0.0;
    double third = 0.0;
};

// Ground state, weak coupling, near the critical point: |F| ~ exp(-(tau1 + tau2) t^2).
inline TauPair tau_ground_critical(double alpha_k, double alpha_kp, const ChainParams& p, int Kc)
{
    using namespace heuristics_detail;
    const double dl = distance_to_critical(p);
    require_nonzero(alpha_k, alpha_kp);
    const double g2 = p.gamma * p.gamma;
    const double da = alpha_k - alpha_kp;
    return {2.0 * g2 * da * da * cutoff_sum(2, Kc, p.N) / (dl * dl),
            8.0 * p.D * g2 * da * (sign(alpha_k) - sign(alpha_kp)) * cutoff_sum(3, Kc, p.N) / (dl * dl)};
}

inline double approx_ground_weak(double tau1, double tau2, double t)
{
    return std::exp(-(tau1 + tau2) * t * t);
}

// Ground state, weak coupling, far from the critical point.
inline TauPair tau_ground_far(double alpha_k, double alpha_kp, const ChainParams& p, int Kc)
{
    const double dl = heuristics_detail::distance_to_critical(p);
    const double g2 = p.gamma * p.gamma;
    const double da = alpha_kp - alpha_k;
    return {2.0 * g2 * da * da * cutoff_sum(2, Kc, p.N) / (dl * dl),
            8.0 * p.D * g2 * da * da * cutoff_sum(3, Kc, p.N) / (dl * dl)};
}

struct EnvelopeShape {
    double period = std::numeric_limits<double>::infinity();
    double width = std::numeric_limits<double>::infinity();
};

struct StrongEnvelope {
    EnvelopeShape shape;
    double mean_energy = 0.0; // Lambda_kk'
    int N = 0;

    // exp(-t^2 / (2 W^2)) |cos(Lambda_kk' t)|^{N/2}
    double operator()(double t) const
    {
        const double gauss = std::isinf(shape.width) ? 1.0 : std::exp(-0.5 * t * t / (shape.width * shape.width));
        return gauss * std::pow(std::abs(std::cos(mean_energy * t)), 0.5 * N);
    }
};

// Ground state, strong coupling, alpha_k and alpha_k' of opposite sign:
// an oscillation of period P under a Gaussian envelope of width W.
inline StrongEnvelope strong_coupling_envelope(double alpha_k, double alpha_kp, const ChainParams& p)
{
    heuristics_detail::require_nonzero(alpha_k, alpha_kp);
    if (alpha_k * alpha_kp > 0.0)
        throw WrongRegime("envelope needs alpha_k and alpha_k' of opposite sign");
    const double inv = 1.0 / std::abs(alpha_k) + 1.0 / std::abs(alpha_kp);
    const double g2 = p.gamma * p.gamma;

    StrongEnvelope env;
    env.N = p.N;
    env.mean_energy = 2.0 * (std::abs(alpha_k) + std::abs(alpha_kp)) + 0.5 * g2 * inv;
    env.shape.period = std::numbers::pi / env.mean_energy;
    const double rate = (0.25 * g2 * g2 * inv * inv + 64.0 * p.D * p.D) * p.N;
    env.shape.width = rate > 0.0 ? 1.0 / std::sqrt(rate) : std::numeric_limits<double>::infinity();
    return env;
}

struct StrongOscillation {
    double period = std::numeric_limits<double>::infinity();
    double exponent = 0.0;    // N / 2
    double mean_energy = 0.0; // Lambda_kk'

    // |cos(Lambda_kk' t)|^{N/2}
    double operator()(double t) const { return std::pow(std::abs(std::cos(mean_energy * t)), exponent); }
};

// Ground state, strong coupling, alpha_k and alpha_k' of the same sign.
inline StrongOscillation strong_coupling_oscillation(double alpha_k, double alpha_kp, const ChainParams& p)
{
    heuristics_detail::require_nonzero(alpha_k, alpha_kp);
    if (alpha_k * alpha_kp < 0.0)
        throw WrongRegime("oscillation needs alpha_k and alpha_k' of the same sign");
    const double g2 = p.gamma * p.gamma;
    StrongOscillation osc;
    osc.exponent = 0.5 * p.N;
    osc.mean_energy = 2.0 * (std::abs(alpha_k) - std::abs(alpha_kp)) +
                      0.5 * g2 * (1.0 / std::abs(alpha_k) - 1.0 / std::abs(alpha_kp));
    osc.period = osc.mean_energy == 0.0 ? std::numeric_limits<double>::infinity()
                                        : std::numbers::pi / std::abs(osc.mean_energy);
    return osc;
}

// Vacuum state, strong coupling: no decoherence.
inline double vacuum_strong(double /*alpha_k*/, double /*alpha_kp*/) { return 1.0; }

// Vacuum state, weak coupling, near the critical point:
// |F| ~ exp(-(tau1'' + tau2'') t^4) exp(-tau3'' t^2).
inline TauTriple tau_vacuum_critical(double alpha_k, double alpha_kp, const ChainParams& p, int Kc)
{
    heuristics_detail::require_nonzero(alpha_k, alpha_kp);
    const double g2 = p.gamma * p.gamma;
    const double da = alpha_kp - alpha_k;
    const double inv_sum = 1.0 / std::abs(alpha_k) + 1.0 / std::abs(alpha_kp);
    const double inv_diff = 1.0 / std::abs(alpha_k) - 1.0 / std::abs(alpha_kp);
    return {8.0 * g2 * da * da * cutoff_sum(2, Kc, p.N),
            32.0 * p.D * g2 * da * da * cutoff_sum(3, Kc, p.N) * inv_sum,
            8.0 * p.D * p.D * g2 * cutoff_sum(4, Kc, p.N) * inv_diff * inv_diff};
}

inline double approx_vacuum_critical(const TauTriple& tau, double t)
{
    const double t2 = t * t;
    return std::exp(-(tau.first + tau.second) * t2 * t2) * std::exp(-tau.third * t2);
}

// Vacuum state, weak coupling, far from the critical point: |F| ~ exp(-(tau1'' + tau2''') t^4).
inline TauPair tau_vacuum_far(double alpha_k, double alpha_kp, const ChainParams& p, int Kc)
{
    const double dl = heuristics_detail::distance_to_critical(p);
    const double g2 = p.gamma * p.gamma;
    const double da = alpha_kp - alpha_k;
    return {8.0 * g2 * da * da * cutoff_sum(2, Kc, p.N),
            64.0 * p.D * g2 * da * da * cutoff_sum(3, Kc, p.N) / std::abs(dl)};
}

inline double approx_vacuum_far(const TauPair& tau, double t)
{
    const double t2 = t * t;
    return std::exp(-(tau.first + tau.second) * t2 * t2);
}

// Heuristic |F| in the given regime, as a callable of t. Sign and field
// checks happen here, so a misclassified regime fails before any evaluation.
struct HeuristicModel {
    HeuristicRegime regime;
    std::function<double(double)> value;
};

inline HeuristicModel make_heuristic(HeuristicRegime regime, double alpha_k, double alpha_kp,
                                     const ChainParams& p, std::optional<int> Kc = std::nullopt)
{
    validate(p);
    const int cutoff = Kc.value_or(default_cutoff(p.N));
    switch (regime) {
    case HeuristicRegime::GroundWeakCritical: {
        const auto tau = tau_ground_critical(alpha_k, alpha_kp, p, cutoff);
        return {regime, [tau](double t) { return approx_ground_weak(tau.first, tau.second, t); }};
    }
    case HeuristicRegime::GroundWeakFar: {
        const auto tau = tau_ground_far(alpha_k, alpha_kp, p, cutoff);
        return {regime, [tau](double t) { return approx_ground_weak(tau.first, tau.second, t); }};
    }
    case HeuristicRegime::GroundStrongOpposite: {
        const auto env = strong_coupling_envelope(alpha_k, alpha_kp, p);
        return {regime, [env](double t) { return env(t); }};
    }
    case HeuristicRegime::GroundStrongSame: {
        const auto osc = strong_coupling_oscillation(alpha_k, alpha_kp, p);
        return {regime, [osc](double t) { return osc(t); }};
    }
    case HeuristicRegime::VacuumStrong:
        return {regime, [alpha_k, alpha_kp](double) { return vacuum_strong(alpha_k, alpha_kp); }};
    case HeuristicRegime::VacuumWeakCritical: {
        const auto tau = tau_vacuum_critical(alpha_k, alpha_kp, p, cutoff);
        return {regime, [tau](double t) { return approx_vacuum_critical(tau, t); }};
    }
    case HeuristicRegime::VacuumWeakFar: {
        const auto tau = tau_vacuum_far(alpha_k, alpha_kp, p, cutoff);
        return {regime, [tau](double t) { return approx_vacuum_far(tau, t); }};
    }
    }
    throw InvalidArgument("unknown regime");
}

} // namespace spindec
