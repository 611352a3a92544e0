#include <gtest/gtest.h>

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "spindec/cli/config.hpp"
#include "spindec/cli/presets.hpp"

namespace {

namespace fs = std::filesystem;

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

fs::path scratch()
{
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("spindec_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Run run(const std::string& args, const std::string& env = "")
{
    static int counter = 0;
    const auto err = scratch() / ("err" + std::to_string(counter++));
    const std::string cmd = env + " " + SPINDEC_BIN + std::string(" ") + args + " 2>" + err.string();
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err);
    return r;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::size_t col(const std::string& name) const
    {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        throw std::runtime_error("no column " + name);
    }
};

Table parse_csv(const std::string& text)
{
    Table t;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (first) {
            t.header = cells;
            first = false;
            continue;
        }
        std::vector<double> row;
        for (const auto& c : cells) row.push_back(std::stod(c));
        t.rows.push_back(row);
    }
    return t;
}

} // namespace

TEST(CliFactor, SingleTimeSample)
{
    const auto r = run("factor --t-max 0 --t-steps 1");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "t,F\n0,1\n");
}

TEST(CliFactor, Fig6SurfaceStaysCoherent)
{
    const auto r = run("factor --preset fig6");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto t = parse_csv(r.out);
    EXPECT_EQ(t.header, (std::vector<std::string>{"t", "D", "F"}));
    EXPECT_EQ(t.rows.size(), 21u * 200u);
    for (const auto& row : t.rows) EXPECT_GE(row[2], 0.999);
}

TEST(CliFactor, Fig2LargerChainsDecayFaster)
{
    const auto r = run("factor --preset fig2a --t-max 1 --t-steps 11");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto t = parse_csv(r.out);
    ASSERT_EQ(t.rows.size(), 33u);
    // rows ordered by N then t; compare at t = 0.3
    const double f100 = t.rows[3][2], f200 = t.rows[14][2], f400 = t.rows[25][2];
    EXPECT_EQ(t.rows[3][1], 100);
    EXPECT_EQ(t.rows[25][1], 400);
    EXPECT_LT(f400, f200);
    EXPECT_LT(f200, f100);
}

TEST(CliFactor, AlphaOverride)
{
    const auto a = run("factor --alpha-k 0.15 --alpha-kprime -0.15 --t-max 2 --t-steps 5");
    const auto b = run("factor --g 0.05 --k 0 --kprime 7 --t-max 2 --t-steps 5");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(CliQcorr, WStateConstants)
{
    const auto r = run("qcorr --a 0 --N 200 --gamma 0.3 --lambda 1.2 --D 0.7 --g 0.1 --prep vacuum --t-max 10 --t-steps 21");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto t = parse_csv(r.out);
    EXPECT_EQ(t.header, (std::vector<std::string>{"t", "F07", "negativity", "gtqd"}));
    for (const auto& row : t.rows) {
        EXPECT_NEAR(row[2], 0.9428090, 1e-7);
        EXPECT_NEAR(row[3], 0.9182958, 1e-7);
    }
}

TEST(CliQcorr, GHZNegativityEqualsF07)
{
    const auto r = run("qcorr --preset fig7a --t-steps 50");
    ASSERT_EQ(r.code, 0) << r.err;
    for (const auto& row : parse_csv(r.out).rows) EXPECT_NEAR(row[2], row[1], 1e-12);
}

TEST(CliQcorr, Fig8dNegativityConserved)
{
    const auto r = run("qcorr --preset fig8d");
    ASSERT_EQ(r.code, 0) << r.err;
    for (const auto& row : parse_csv(r.out).rows) EXPECT_GE(row[2], 0.999);
}

TEST(CliQcorr, RejectsBadMixture)
{
    const auto r = run("qcorr --a 1.5");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("InvalidArgument"), std::string::npos);
}

TEST(CliHeuristic, SameMagnitudeOscillationIsFlat)
{
    const auto r = run("heuristic --regime GroundStrongSame --alpha-k 500 --alpha-kprime 500 --t-max 5 --t-steps 11");
    ASSERT_EQ(r.code, 0) << r.err;
    for (const auto& row : parse_csv(r.out).rows) EXPECT_EQ(row[2], 1.0);
}

TEST(CliHeuristic, VacuumStrongAgainstExact)
{
    const auto r = run("heuristic --regime VacuumStrong --g 500 --k 0 --kprime 7 --N 400 --gamma 0.5 --lambda 1 "
                       "--t-max 5 --t-steps 101");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto t = parse_csv(r.out);
    EXPECT_EQ(t.header, (std::vector<std::string>{"t", "F_exact", "F_heuristic"}));
    EXPECT_EQ(t.rows[0][1], 1.0);
    EXPECT_EQ(t.rows[0][2], 1.0);
    for (const auto& row : t.rows) {
        EXPECT_EQ(row[2], 1.0);
        EXPECT_GE(row[1], 0.999);
    }
}

TEST(CliHeuristic, WrongRegimeExitCode)
{
    const auto r = run("heuristic --regime GroundStrongOpposite --g 500 --k 0 --kprime 1");
    EXPECT_EQ(r.code, 4);
    EXPECT_NE(r.err.find("WrongRegime"), std::string::npos);
}

TEST(CliHeuristic, NumericErrorExitCode)
{
    const auto r = run("heuristic --regime GroundWeakCritical --lambda 1");
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("SingularField"), std::string::npos);
}

TEST(CliHeuristic, UnknownRegime)
{
    EXPECT_EQ(run("heuristic --regime Sideways").code, 2);
}

TEST(CliOracle, DefaultRunPasses)
{
    const auto r = run("oracle-verify --seed 42 --draws 200");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("ground max deviation"), std::string::npos);
    EXPECT_NE(r.out.find("vacuum max deviation"), std::string::npos);
}

TEST(CliOracle, ZeroDraws)
{
    const auto r = run("oracle-verify --draws 0");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("0 draws"), std::string::npos);
}

TEST(CliOracle, PerturbedBuildFails)
{
    const auto r = run("oracle-verify --perturb 1e-3");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("worst ground: N="), std::string::npos);
}

TEST(CliUsage, BadFlagsExitTwo)
{
    EXPECT_EQ(run("factor --bogus 3").code, 2);
    EXPECT_EQ(run("factor --prep thermal").code, 2);
    EXPECT_EQ(run("factor --N 401").code, 2);
    EXPECT_EQ(run("factor --preset fig99").code, 2);
    EXPECT_EQ(run("factor --preset fig7a").code, 2);
    EXPECT_EQ(run("factor --t-steps 0").code, 2);
    EXPECT_EQ(run("factor --D-min 0 --D-max 1").code, 2);
    EXPECT_EQ(run("").code, 2);
}

TEST(CliConfig, FlagsWinOverConfigFile)
{
    const auto path = scratch() / "run.cfg";
    std::ofstream(path) << "# weak coupling\nN = 100\n--t-max = 4\nt-steps = 5\nprep=vacuum\n";
    const auto from_file = run("factor --config " + path.string());
    ASSERT_EQ(from_file.code, 0) << from_file.err;
    EXPECT_EQ(parse_csv(from_file.out).rows.size(), 5u);
    EXPECT_EQ(from_file.out, run("factor --N 100 --t-max 4 --t-steps 5 --prep vacuum").out);
    const auto overridden = run("factor --config " + path.string() + " --t-steps 3");
    EXPECT_EQ(parse_csv(overridden.out).rows.size(), 3u);
    EXPECT_EQ(run("factor --config " + (scratch() / "missing.cfg").string()).code, 2);
}

TEST(CliConfig, ParserRejectsMalformedLines)
{
    std::istringstream bad("N 400\n");
    EXPECT_THROW(spindec::cli::parse_config(bad), spindec::InvalidArgument);
    std::istringstream good("  # c\n\nN=4\n--gamma = 0.5  \n");
    const auto kv = spindec::cli::parse_config(good);
    ASSERT_EQ(kv.size(), 2u);
    EXPECT_EQ(kv[1].first, "gamma");
    EXPECT_EQ(kv[1].second, "0.5");
}

TEST(CliOutput, DeterministicAcrossRunsAndThreads)
{
    const std::string args = "factor --preset fig1b --D-steps 5 --t-steps 50";
    const auto a = run(args, "SPINDEC_THREADS=1");
    const auto b = run(args, "SPINDEC_THREADS=8");
    const auto c = run(args, "SPINDEC_THREADS=8");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(b.out, c.out);
}

TEST(CliOutput, WritesFileAndPlotScript)
{
    const auto csv = scratch() / "fig5a.csv";
    const auto gp = scratch() / "fig5a.gp";
    const auto r = run("factor --preset fig5a --out " + csv.string() + " --plot " + gp.string());
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(parse_csv(slurp(csv)).rows.size(), 200u);
    EXPECT_NE(slurp(gp).find(csv.string()), std::string::npos);
}

TEST(CliPresets, EveryPresetRunsQuickly)
{
    for (const auto& p : spindec::cli::presets()) {
        const auto start = std::chrono::steady_clock::now();
        const auto r = run(p.command + " --preset " + p.name + " --out " + (scratch() / (p.name + ".csv")).string());
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        EXPECT_EQ(r.code, 0) << p.name << ": " << r.err;
        EXPECT_LT(secs, 60.0) << p.name;
    }
}
