// spindec: decoherence factors and three-qubit correlation dynamics for a
// central spin system coupled to an XY chain with DM interaction.
//
//   spindec factor        --preset fig6 --out fig6.csv
//   spindec qcorr         --a 0.5 --N 400 --gamma 0.4 --lambda 1 --D 0.5 --g 0.05 --prep ground
//   spindec heuristic     --regime VacuumStrong --g 500 --k 0 --kprime 7
//   spindec oracle-verify --seed 42 --draws 200
//
// Flags may also come from --config FILE (`key = value` lines) or --preset
// NAME; explicit flags win over the config file, which wins over the preset.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "spindec/cli/commands.hpp"
#include "spindec/cli/config.hpp"
#include "spindec/cli/presets.hpp"

namespace {

using namespace spindec;
using namespace spindec::cli;

void add_chain(CLI::App* app, ChainParams& c)
{
    app->add_option("--N", c.N, "chain size (even, >= 4)");
    app->add_option("--gamma", c.gamma, "XY anisotropy");
    app->add_option("--lambda", c.lambda, "transverse field");
    app->add_option("--D", c.D, "DM strength");
}

void add_time(CLI::App* app, TimeGrid& t)
{
    app->add_option("--t-max", t.t_max, "last time sample");
    app->add_option("--t-steps", t.steps, "number of time samples");
}

void add_alpha(CLI::App* app, AlphaSource& a)
{
    app->add_option("--g", a.g, "uniform system-chain coupling");
    app->add_option("--R", a.R, "number of central spins for --k/--kprime");
    app->add_option("--k", a.k, "bitstring of the first branch");
    app->add_option("--kprime", a.kprime, "bitstring of the second branch");
    app->add_option("--alpha-k", a.alpha_k, "override alpha_k");
    app->add_option("--alpha-kprime", a.alpha_kp, "override alpha_k'");
}

void add_common(CLI::App* app)
{
    // consumed by the pre-pass; declared so the parser accepts them
    app->add_option("--preset", "named parameter set");
    app->add_option("--config", "key = value file");
}

// Appends config-file and preset values for flags absent from the command line.
std::vector<std::string> expand_args(std::vector<std::string> args)
{
    const std::string command = args.empty() ? "" : args.front();
    if (const auto cfg = find_flag(args, "config"); !cfg.empty()) inject_defaults(args, read_config_file(cfg));
    if (const auto name = find_flag(args, "preset"); !name.empty()) {
        const Preset* p = find_preset(name);
        if (!p) throw InvalidArgument("unknown preset '" + name + "'");
        if (p->command != command)
            throw InvalidArgument("preset " + name + " belongs to the '" + p->command + "' command");
        inject_defaults(args, p->values);
    }
    return args;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Central-spin decoherence in an XY chain with DM interaction"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "spindec 1.0");

    FactorOptions factor;
    auto* f = app.add_subcommand("factor", "|F_kk'(t)| on a time grid, optionally swept over D, N or lambda");
    add_chain(f, factor.chain);
    add_alpha(f, factor.alpha);
    add_time(f, factor.time);
    f->add_option("--prep", factor.prep, "ground | vacuum");
    f->add_option("--D-min", factor.D_min);
    f->add_option("--D-max", factor.D_max);
    f->add_option("--D-steps", factor.D_steps);
    f->add_option("--N-values", factor.N_values, "comma-separated chain sizes")->delimiter(',');
    f->add_option("--lambda-values", factor.lambda_values, "comma-separated fields")->delimiter(',');
    f->add_option("--out", factor.out, "CSV path, - for stdout");
    f->add_option("--plot", factor.plot, "also write a gnuplot script");
    add_common(f);

    QcorrOptions qc;
    auto* q = app.add_subcommand("qcorr", "negativity and discord of the GHZ/W mixture over time");
    add_chain(q, qc.chain);
    add_time(q, qc.time);
    q->add_option("--a", qc.a, "GHZ weight amplitude in [0, 1]");
    q->add_option("--g", qc.g, "uniform system-chain coupling");
    q->add_option("--J", qc.J, "central exchange (default 1)");
    q->add_option("--Delta", qc.Delta, "central z anisotropy (default 0.5)");
    q->add_option("--M", qc.M, "central DM (default 0.5)");
    q->add_option("--B", qc.B, "central field (default lambda)");
    q->add_option("--prep", qc.prep, "ground | vacuum");
    q->add_option("--out", qc.out, "CSV path, - for stdout");
    q->add_option("--plot", qc.plot, "also write a gnuplot script");
    add_common(q);

    HeuristicOptions heur;
    auto* h = app.add_subcommand("heuristic", "exact |F| next to a regime approximation");
    add_chain(h, heur.chain);
    add_alpha(h, heur.alpha);
    add_time(h, heur.time);
    h->add_option("--regime", heur.regime, "approximation regime")->required();
    h->add_option("--Kc", heur.Kc, "mode cutoff (default N/2 - 1)");
    h->add_option("--out", heur.out, "CSV path, - for stdout");
    add_common(h);

    OracleOptions orc;
    auto* o = app.add_subcommand("oracle-verify", "closed-form per-mode factors against the 4x4 propagator");
    o->add_option("--seed", orc.seed);
    o->add_option("--draws", orc.draws);
    o->add_option("--perturb", orc.perturb, "scale the closed form by (1 + perturb); test hook");

    try {
        auto args = expand_args(std::vector<std::string>(argv + 1, argv + argc));
        std::reverse(args.begin(), args.end()); // CLI11 consumes the vector from the back
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    } catch (const InvalidArgument& e) {
        std::cerr << e.what() << "\n";
        return usage;
    }

    try {
        if (*f) return cmd_factor(factor);
        if (*q) return cmd_qcorr(qc);
        if (*h) return cmd_heuristic_compare(heur);
        if (*o) return cmd_oracle_verify(orc, std::cout);
    } catch (const InvalidArgument& e) {
        std::cerr << e.what() << "\n";
        return usage;
    } catch (const WrongRegime& e) {
        std::cerr << e.what() << "\n";
        return regime;
    } catch (const NumericError& e) {
        std::cerr << e.what() << "\n";
        return numeric;
    }
    return usage;
}
