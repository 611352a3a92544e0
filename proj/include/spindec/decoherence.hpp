#pragma once

// Exact decoherence-factor magnitudes |F_kk'(t)| for the XY+DM chain prepared
// either in its Bogoliubov ground state or in the fermionic vacuum, evaluated
// as a product over the paired momentum modes j = 1..L.
//
// The per-mode phases use the paired-sector rate 2*eps_j rather than the
// single-mode energy Lambda_j: the initial states live in the even-parity
// sector of (j, -j), where the DM shifts of +j and -j cancel. With D = 0 the
// two coincide. The brute-force propagator in oracle.hpp pins this down.

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "spindec/chain_spectrum.hpp"
#include "spindec/errors.hpp"
#include "spindec/parallel.hpp"

namespace spindec {

enum class EnvPreparation { Ground, Vacuum };

inline std::string to_string(EnvPreparation p)
{
    return p == EnvPreparation::Ground ? "ground" : "vacuum";
}

struct FactorRequest {
    ChainParams chain;
    double lambda_k = 1.0;
    double lambda_kp = 1.0;
    EnvPreparation prep = EnvPreparation::Ground;
    std::vector<double> times;
    bool keep_per_mode_log = false;
};

struct DecoherenceSeries {
    std::vector<double> times;
    std::vector<double> magnitudes;
    // per_mode_log[i][j-1] = log m_j(times[i]); only filled on request.
    std::optional<std::vector<std::vector<double>>> per_mode_log;
};

namespace detail {

// Angles and rates of one paired mode under the two conditional fields.
struct ModePair {
    double theta_k, theta_kp;       // Bogoliubov angles at lambda_k, lambda_k'
    double vartheta_k, vartheta_kp; // relative to the bare field
    double omega_k, omega_kp;       // paired-sector phase rates
    bool identical;                 // lambda_k == lambda_k'
};

inline ModePair make_mode_pair(ModeIndex m, double lambda_k, double lambda_kp, const ChainParams& p)
{
    const double theta0 = bogoliubov_angle(m, p.lambda, p);
    ModePair mp{};
    mp.theta_k = bogoliubov_angle(m, lambda_k, p);
    mp.theta_kp = bogoliubov_angle(m, lambda_kp, p);
    mp.vartheta_k = 0.5 * (mp.theta_k - theta0);
    mp.vartheta_kp = 0.5 * (mp.theta_kp - theta0);
    mp.omega_k = pair_energy(m, lambda_k, p);
    mp.omega_kp = pair_energy(m, lambda_kp, p);
    mp.identical = (lambda_k == lambda_kp);
    return mp;
}

inline std::complex<double> ground_amplitude(const ModePair& mp, double t)
{
    if (t == 0.0 || mp.identical) return {1.0, 0.0};
    const double vk = mp.vartheta_k, vp = mp.vartheta_kp, d = vk - vp;
    const double sk = std::sin(vk), ck = std::cos(vk);
    const double sp = std::sin(vp), cp = std::cos(vp);
    const double sd = std::sin(d), cd = std::cos(d);
    const double diff = (mp.omega_k - mp.omega_kp) * t;
    const double sum = (mp.omega_k + mp.omega_kp) * t;
    const auto phase = [](double x) { return std::polar(1.0, x); };
    return sk * sp * cd * phase(-diff) - ck * sp * sd * phase(sum) + sk * cp * sd * phase(-sum) +
           ck * cp * cd * phase(diff);
}

inline double vacuum_magnitude(const ModePair& mp, double t)
{
    if (t == 0.0 || mp.identical) return 1.0;
    const double ak = mp.omega_k * t, ap = mp.omega_kp * t;
    const double sak = std::sin(ak), cak = std::cos(ak);
    const double sap = std::sin(ap), cap = std::cos(ap);
    const double sdt = std::sin(mp.theta_k - mp.theta_kp);
    const double cross = sak * cap * std::sin(mp.theta_k) - cak * sap * std::sin(mp.theta_kp);
    const double bracket = 1.0 - sak * sak * sap * sap * sdt * sdt - cross * cross;
    if (bracket < -1e-6)
        throw NumericalNegativity("vacuum bracket " + std::to_string(bracket) + " at t = " +
                                  std::to_string(t));
    return bracket <= 0.0 ? 0.0 : std::sqrt(bracket);
}

inline double mode_magnitude(const ModePair& mp, double t, EnvPreparation prep)
{
    return prep == EnvPreparation::Ground ? std::abs(ground_amplitude(mp, t))
                                          : vacuum_magnitude(mp, t);
}

inline void validate_times(const std::vector<double>& times)
{
    if (times.empty()) throw InvalidArgument("time grid is empty");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!std::isfinite(times[i]) || times[i] < 0.0)
            throw InvalidArgument("times must be finite and nonnegative");
        if (i > 0 && !(times[i] > times[i - 1]))
            throw InvalidArgument("times must be strictly increasing");
    }
}

} // namespace detail

// Per-mode complex amplitude for the ground-state preparation. Its modulus is
// the j-th factor of |F_kk'(t)|; the overall phase omits dropped constants.
inline std::complex<double> ground_mode_amplitude(ModeIndex m, double lambda_k, double lambda_kp,
                                                  double t, const ChainParams& p)
{
    validate(p);
    return detail::ground_amplitude(detail::make_mode_pair(m, lambda_k, lambda_kp, p), t);
}

inline double vacuum_mode_magnitude(ModeIndex m, double lambda_k, double lambda_kp, double t,
                                    const ChainParams& p)
{
    validate(p);
    return detail::vacuum_magnitude(detail::make_mode_pair(m, lambda_k, lambda_kp, p), t);
}

// |F_kk'(t)| on a time grid. For every t the log-magnitudes are summed in
// ascending j, so the result is independent of how many threads evaluate it.
// A vanishing mode factor makes the whole product exactly 0.
inline DecoherenceSeries decoherence_factor(const FactorRequest& req)
{
    validate(req.chain);
    detail::validate_times(req.times);
    if (!std::isfinite(req.lambda_k) || !std::isfinite(req.lambda_kp))
        throw InvalidArgument("effective fields must be finite");

    const int L = paired_mode_count(req.chain.N);
    std::vector<detail::ModePair> modes;
    modes.reserve(L);
    for (int j = 1; j <= L; ++j)
        modes.push_back(detail::make_mode_pair(ModeIndex{j}, req.lambda_k, req.lambda_kp, req.chain));

    DecoherenceSeries out;
    out.times = req.times;
    out.magnitudes.assign(req.times.size(), 1.0);
    if (req.keep_per_mode_log)
        out.per_mode_log.emplace(req.times.size(), std::vector<double>(L, 0.0));

    parallel_for(req.times.size(), [&](std::size_t i) {
        const double t = req.times[i];
        double log_sum = 0.0;
        bool vanished = false;
        for (int j = 0; j < L; ++j) {
            const double m = detail::mode_magnitude(modes[j], t, req.prep);
            const double lm = m > 0.0 ? std::log(m) : -INFINITY;
            if (out.per_mode_log) (*out.per_mode_log)[i][j] = lm;
            if (m == 0.0) vanished = true;
            log_sum += m > 0.0 ? lm : 0.0;
        }
        out.magnitudes[i] = vanished ? 0.0 : (t == 0.0 ? 1.0 : std::exp(log_sum));
    });
    return out;
}

// Convenience for a single time sample.
inline double decoherence_magnitude(const ChainParams& chain, double lambda_k, double lambda_kp,
                                    EnvPreparation prep, double t)
{
    FactorRequest req{chain, lambda_k, lambda_kp, prep, {t}, false};
    return decoherence_factor(req).magnitudes.front();
}

} // namespace spindec
