#include <gtest/gtest.h>

#include <cmath>

#include "spindec/oracle.hpp"

using namespace spindec;

namespace {

double norm(const PairedModeState& s)
{
    double n = 0.0;
    for (const auto& v : s) n += std::norm(v);
    return std::sqrt(n);
}

} // namespace

TEST(PairedModeHamiltonian, HermitianAndParityConserving)
{
    for (double D : {0.0, 0.8})
        for (int j = 1; j <= 5; ++j) {
            const auto h = build_mode_hamiltonian(ModeIndex{j}, 0.7, {12, 0.6, 1.0, D});
            EXPECT_LT(hermiticity_residual(h), 1e-15);
            EXPECT_EQ(parity_mixing(h), 0.0);
        }
}

// Even block: eigenvalue splitting 4 eps = Lambda_j + Lambda_-j.
TEST(PairedModeHamiltonian, EvenBlockGapIsFourEpsilon)
{
    const ChainParams c{16, 0.45, 1.0, 0.6};
    for (int j = 1; j <= 7; ++j)
        for (double lk : {-0.7, 0.95, 2.2}) {
            const auto h = build_mode_hamiltonian(ModeIndex{j}, lk, c);
            const double a = h(0, 0).real(), d = h(3, 3).real();
            const double gap = std::sqrt((a - d) * (a - d) + 4.0 * std::norm(h(0, 3)));
            EXPECT_NEAR(gap, 4.0 * single_particle_energy(ModeIndex{j}, lk, c), 1e-12);
            EXPECT_NEAR(gap, mode_energy(ModeIndex{j}, lk, c) + mode_energy(ModeIndex{j}, lk, {16, 0.45, 1.0, -0.6}),
                        1e-12);
        }
}

TEST(PairedModeHamiltonian, GroundStateIsLowestEvenEigenvector)
{
    const ChainParams c{20, 0.7, 1.3, 0.4};
    for (int j = 1; j <= 9; ++j) {
        const ModeIndex m{j};
        const auto h = build_mode_hamiltonian(m, c.lambda, c);
        const auto psi = initial_mode_state(m, EnvPreparation::Ground, c);
        const double a = h(0, 0).real(), d = h(3, 3).real();
        const double lowest = 0.5 * (a + d) - 0.5 * std::sqrt((a - d) * (a - d) + 4.0 * std::norm(h(0, 3)));
        const cplx r0 = h(0, 0) * psi[0] + h(0, 3) * psi[3] - lowest * psi[0];
        const cplx r3 = h(3, 0) * psi[0] + h(3, 3) * psi[3] - lowest * psi[3];
        EXPECT_LT(std::abs(r0) + std::abs(r3), 1e-12) << "j=" << j;
    }
}

TEST(PairedModeHamiltonian, PropagationIsUnitary)
{
    const ChainParams c{12, 0.9, 0.6, 0.3};
    const auto h = build_mode_hamiltonian(ModeIndex{2}, -1.1, c);
    const PairedModeState psi{cplx(0.5, 0.1), cplx(0.2, -0.4), cplx(0.0, 0.3), cplx(-0.6, 0.0)};
    for (double t : {0.0, 0.5, 3.0, 40.0}) EXPECT_NEAR(norm(evolve_paired_state(h, psi, t)), norm(psi), 1e-13);
}

TEST(PairedModeHamiltonian, RejectsBadMode)
{
    EXPECT_THROW(build_mode_hamiltonian(ModeIndex{6}, 1.0, {12, 0.5, 1.0, 0.0}), InvalidArgument);
}

TEST(OracleComparison, TwoHundredDrawsAgree)
{
    const auto r = run_oracle_comparison(42, 200);
    EXPECT_EQ(r.draws, 200u);
    EXPECT_LT(r.ground.deviation, 1e-10) << describe(*r.ground.draw);
    EXPECT_LT(r.vacuum.deviation, 1e-10) << describe(*r.vacuum.draw);
    EXPECT_TRUE(r.passed());
}

TEST(OracleComparison, OtherSeedsAgree)
{
    for (std::uint64_t seed : {1u, 2u, 3u, 2024u}) EXPECT_TRUE(run_oracle_comparison(seed, 50).passed()) << seed;
}

TEST(OracleComparison, PerturbationIsDetected)
{
    const auto r = run_oracle_comparison(42, 200, 1e-3);
    EXPECT_FALSE(r.passed());
    ASSERT_TRUE(r.ground.draw);
    EXPECT_GT(r.ground.deviation, 1e-6);
}

TEST(OracleComparison, ZeroDrawsPass)
{
    const auto r = run_oracle_comparison(42, 0);
    EXPECT_EQ(r.draws, 0u);
    EXPECT_TRUE(r.passed());
    EXPECT_FALSE(r.ground.draw);
}

TEST(OracleComparison, DeterministicForSeed)
{
    const auto a = run_oracle_comparison(9, 30);
    const auto b = run_oracle_comparison(9, 30);
    EXPECT_EQ(a.ground.deviation, b.ground.deviation);
    EXPECT_EQ(a.vacuum.deviation, b.vacuum.deviation);
}
