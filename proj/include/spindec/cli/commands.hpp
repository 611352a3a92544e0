#pragma once

// Subcommand implementations. Each returns a process exit code; library
// errors propagate as exceptions and are mapped to exit codes by the caller.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "spindec/central_system.hpp"
#include "spindec/chain_spectrum.hpp"
#include "spindec/cli/csv.hpp"
#include "spindec/decoherence.hpp"
#include "spindec/heuristics.hpp"
#include "spindec/oracle.hpp"
#include "spindec/qcorr.hpp"

namespace spindec::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage = 2, numeric = 3, regime = 4 };

struct TimeGrid {
    double t_max = 20.0;
    int steps = 200;
};

// t_i = t_max * i / (steps - 1); a single step is t = 0.
inline std::vector<double> make_times(const TimeGrid& g)
{
    if (g.steps < 1) throw InvalidArgument("--t-steps must be >= 1");
    if (!std::isfinite(g.t_max) || g.t_max < 0.0) throw InvalidArgument("--t-max must be finite and >= 0");
    if (g.steps > 1 && g.t_max == 0.0) throw InvalidArgument("--t-max must be > 0 when --t-steps > 1");
    std::vector<double> t(g.steps, 0.0);
    for (int i = 1; i < g.steps; ++i) t[i] = g.t_max * i / (g.steps - 1);
    return t;
}

inline EnvPreparation parse_preparation(const std::string& s)
{
    if (s == "ground") return EnvPreparation::Ground;
    if (s == "vacuum") return EnvPreparation::Vacuum;
    throw InvalidArgument("--prep must be ground or vacuum, got '" + s + "'");
}

// alpha from an explicit value or from bitstring k of R spins with uniform g.
struct AlphaSource {
    double g = 0.05;
    int R = 3;
    std::uint64_t k = 0;
    std::uint64_t kprime = 7;
    std::optional<double> alpha_k;
    std::optional<double> alpha_kp;

    std::pair<double, double> resolve() const
    {
        if (R < 1 || R > 62) throw InvalidArgument("--R must lie in [1, 62]");
        if (!std::isfinite(g) || g < 0.0) throw InvalidArgument("--g must be finite and >= 0");
        const std::vector<double> couplings(R, g);
        return {alpha_k ? *alpha_k : alpha_of_bitstring(k, couplings),
                alpha_kp ? *alpha_kp : alpha_of_bitstring(kprime, couplings)};
    }
};

inline void write_plot_script(const std::string& path, const std::string& csv, const std::string& x,
                              const std::vector<std::string>& columns, bool surface)
{
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write plot script " + path);
    out << "set datafile separator ','\nset key autotitle columnhead\nset xlabel 't'\n";
    if (surface) {
        out << "set ylabel '" << x << "'\nset zlabel '|F|'\nsplot '" << csv << "' using 1:2:3 with points pt 7 ps 0.3\n";
        return;
    }
    out << "plot ";
    for (std::size_t i = 0; i < columns.size(); ++i)
        out << (i ? ", " : "") << "'" << csv << "' using 1:" << i + 2 << " with lines";
    out << "\n";
}

// ---------------------------------------------------------------- factor

struct FactorOptions {
    ChainParams chain;
    AlphaSource alpha;
    std::string prep = "ground";
    TimeGrid time;
    std::optional<double> D_min, D_max;
    std::optional<int> D_steps;
    std::vector<int> N_values;
    std::vector<double> lambda_values;
    std::string out = "-";
    std::string plot;
};

inline int cmd_factor(const FactorOptions& o)
{
    const auto prep = parse_preparation(o.prep);
    const auto times = make_times(o.time);
    const auto [ak, akp] = o.alpha.resolve();

    const bool d_sweep = o.D_min || o.D_max || o.D_steps;
    if (int(d_sweep) + int(!o.N_values.empty()) + int(!o.lambda_values.empty()) > 1)
        throw InvalidArgument("at most one sweep (D range, --N-values, --lambda-values) per run");

    std::string x;
    std::vector<ChainParams> chains;
    std::vector<double> xs;
    if (d_sweep) {
        if (!o.D_min || !o.D_max || !o.D_steps)
            throw InvalidArgument("a D sweep needs --D-min, --D-max and --D-steps");
        if (*o.D_steps < 1 || *o.D_max < *o.D_min || (*o.D_steps > 1 && *o.D_max == *o.D_min))
            throw InvalidArgument("invalid D sweep range");
        x = "D";
        for (int i = 0; i < *o.D_steps; ++i) {
            const double D = *o.D_steps == 1 ? *o.D_min : *o.D_min + (*o.D_max - *o.D_min) * i / (*o.D_steps - 1);
            chains.push_back(o.chain);
            chains.back().D = D;
            xs.push_back(D);
        }
    } else if (!o.N_values.empty()) {
        x = "N";
        auto ns = o.N_values;
        std::sort(ns.begin(), ns.end());
        for (int N : ns) {
            chains.push_back(o.chain);
            chains.back().N = N;
            xs.push_back(N);
        }
    } else if (!o.lambda_values.empty()) {
        x = "lambda";
        auto ls = o.lambda_values;
        std::sort(ls.begin(), ls.end());
        for (double l : ls) {
            chains.push_back(o.chain);
            chains.back().lambda = l;
            xs.push_back(l);
        }
    } else {
        chains.push_back(o.chain);
    }

    std::vector<std::vector<double>> series;
    for (const auto& c : chains)
        series.push_back(decoherence_factor({c, c.lambda + ak, c.lambda + akp, prep, times, false}).magnitudes);

    CsvWriter csv(o.out);
    if (x.empty()) {
        csv.header({"t", "F"});
        for (std::size_t i = 0; i < times.size(); ++i) csv.row({times[i], series[0][i]});
    } else {
        csv.header({"t", x, "F"});
        for (std::size_t s = 0; s < chains.size(); ++s)
            for (std::size_t i = 0; i < times.size(); ++i) csv.row({times[i], xs[s], series[s][i]});
    }
    csv.flush();
    if (!o.plot.empty()) write_plot_script(o.plot, o.out, x, {"F"}, !x.empty());
    return ok;
}

// ----------------------------------------------------------------- qcorr

struct QcorrOptions {
    double a = 1.0;
    ChainParams chain;
    double g = 0.05;
    double J = 1.0, Delta = 0.5, M = 0.5;
    std::optional<double> B; // defaults to the chain field
    std::string prep = "ground";
    TimeGrid time;
    std::string out = "-";
    std::string plot;
};

inline std::vector<QCSample> qcorr_series(const QcorrOptions& o)
{
    const auto prep = parse_preparation(o.prep);
    const auto times = make_times(o.time);
    const CentralParams p{o.J, o.Delta, o.M, o.B.value_or(o.chain.lambda), o.g};
    validate(p);
    const auto rho0 = initial_density(o.a);
    const auto alpha = level_alphas(o.g);
    const auto f07 = decoherence_factor({o.chain, o.chain.lambda + alpha[0], o.chain.lambda + alpha[7], prep, times, false});
    const auto rhos = evolve_density_series(rho0, times, p, o.chain, prep);

    std::vector<QCSample> out(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double f = std::min(1.0, f07.magnitudes[i]);
        out[i] = {times[i], negativity_exact(rhos[i]), gtqd_closed_form(o.a, f), f};
    }
    return out;
}

inline int cmd_qcorr(const QcorrOptions& o)
{
    const auto samples = qcorr_series(o);
    CsvWriter csv(o.out);
    csv.header({"t", "F07", "negativity", "gtqd"});
    for (const auto& s : samples) csv.row({s.t, s.f07, s.negativity, s.gtqd});
    csv.flush();
    if (!o.plot.empty()) write_plot_script(o.plot, o.out, "", {"F07", "negativity", "gtqd"}, false);
    return ok;
}

// ------------------------------------------------------------- heuristic

struct HeuristicOptions {
    std::string regime;
    ChainParams chain;
    AlphaSource alpha;
    std::optional<int> Kc;
    TimeGrid time;
    std::string out = "-";
};

inline int cmd_heuristic_compare(const HeuristicOptions& o)
{
    const auto regime = parse_regime(o.regime);
    if (!regime) {
        std::string names;
        for (auto r : all_regimes) names += (names.empty() ? "" : ", ") + std::string(to_string(r));
        throw InvalidArgument("--regime must be one of " + names);
    }
    const auto times = make_times(o.time);
    const auto [ak, akp] = o.alpha.resolve();
    const auto model = make_heuristic(*regime, ak, akp, o.chain, o.Kc);
    const auto exact =
        decoherence_factor({o.chain, o.chain.lambda + ak, o.chain.lambda + akp, preparation_of(*regime), times, false});

    CsvWriter csv(o.out);
    csv.header({"t", "F_exact", "F_heuristic"});
    for (std::size_t i = 0; i < times.size(); ++i) csv.row({times[i], exact.magnitudes[i], model.value(times[i])});
    csv.flush();
    return ok;
}

// ---------------------------------------------------------- oracle-verify

struct OracleOptions {
    std::uint64_t seed = 42;
    std::size_t draws = 200;
    double perturb = 0.0;
    double tolerance = 1e-10;
};

inline int cmd_oracle_verify(const OracleOptions& o, std::ostream& out)
{
    const auto r = run_oracle_comparison(o.seed, o.draws, o.perturb);
    if (r.draws == 0) {
        out << "0 draws: nothing compared\n";
        return ok;
    }
    out << "draws: " << r.draws << " per preparation (seed " << o.seed << ")\n";
    out << "ground max deviation: " << format_number(r.ground.deviation) << "\n";
    out << "vacuum max deviation: " << format_number(r.vacuum.deviation) << "\n";
    if (r.passed(o.tolerance)) {
        out << "PASS (tolerance " << o.tolerance << ")\n";
        return ok;
    }
    out << "FAIL (tolerance " << o.tolerance << ")\n";
    for (const auto* w : {&r.ground, &r.vacuum})
        if (w->deviation >= o.tolerance && w->draw)
            out << "  worst " << (w == &r.ground ? "ground" : "vacuum") << ": " << describe(*w->draw) << "\n";
    return verification_failed;
}

} // namespace spindec::cli
