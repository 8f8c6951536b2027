#include <gtest/gtest.h>

#include "helpers.hpp"
#include "ilpspace/oracles.hpp"
#include "ilpspace/pipeline.hpp"

using namespace ilpspace;
using namespace ilpspace::testing;

TEST(Solve, Examples) {
    auto r = solve(make<BigInt>({{1, 2}}, {4}, {1, 1}));
    ASSERT_EQ(r.result.status, Status::Optimal);
    EXPECT_EQ(r.result.solution->x, vec<BigInt>({0, 2}));
    EXPECT_EQ(r.result.solution->objective, 2);

    EXPECT_EQ(solve(make<BigInt>({{2, 4}}, {5}, {0, 0})).result.status, Status::Infeasible);
    EXPECT_EQ(solve(make<BigInt>({{1, -1}}, {0}, {-1, -1})).result.status, Status::Unbounded);

    r = solve(make<BigInt>({{1, 1}}, {2}, {1, 1}));
    ASSERT_EQ(r.result.status, Status::Optimal);
    EXPECT_EQ(r.result.solution->x, vec<BigInt>({0, 2}));
}

TEST(Solve, UnboundedRelaxationWithoutIntegerPoint) {
    // 2x - 2y = 1 has rational points and a free direction but no integers
    EXPECT_EQ(solve(make<BigInt>({{2, -2}}, {1}, {-1, -1})).result.status, Status::Infeasible);
}

TEST(Feasibility, Examples) {
    Metrics metrics;
    auto r = feasibility(make({{2, 4}}, {6}, {0, 0}), metrics);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->x, vec({1, 1}));
    EXPECT_FALSE(feasibility(make({{2}}, {5}, {0}), metrics));
    auto zero = feasibility(make({{3, -1}}, {0}, {0, 0}), metrics);
    ASSERT_TRUE(zero);
    EXPECT_EQ(zero->x, vec({0, 0}));
}

TEST(Solve, MatchesOracleOnSample) {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        auto inst = small_instance(1 + seed % 3, seed);
        auto expected = oracle_solve(inst);
        auto got = solve_with(inst);
        ASSERT_EQ(got.result.status, expected.status) << "seed " << seed;
        if (expected.solution) EXPECT_EQ(got.result.solution->x, expected.solution->x) << "seed " << seed;
    }
}

TEST(Solve, ThreadCountDoesNotChangeTheAnswer) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto inst = small_instance(1 + seed % 3, seed);
        SolveOptions four;
        four.threads = 4;
        auto a = solve_with(inst);
        auto b = solve_with(inst, four);
        EXPECT_EQ(a.result.status, b.result.status);
        EXPECT_EQ(a.result.solution, b.result.solution);
        EXPECT_EQ(a.metrics.nodes_expanded, b.metrics.nodes_expanded);
        EXPECT_EQ(a.metrics.max_depth, b.metrics.max_depth);
        EXPECT_EQ(a.metrics.peak_live_words, b.metrics.peak_live_words);
    }
}

TEST(Solve, BigIntPathMatchesMachinePath) {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto inst = small_instance(1 + seed % 2, seed);
        auto narrow = solve_with(inst);
        auto wide = solve_with(convert_instance<BigInt>(inst));
        ASSERT_EQ(narrow.result.status, wide.result.status);
        if (narrow.result.solution)
            for (std::size_t j = 0; j < inst.n; ++j)
                EXPECT_EQ(BigInt(narrow.result.solution->x[j]), wide.result.solution->x[j]);
    }
}

TEST(Solve, CostsBeyondSixtyFourBits) {
    auto inst = make<BigInt>({{1, 2}}, {4}, {0, 0});
    inst.c[0] = BigInt(1) << 70;
    inst.c[1] = (BigInt(1) << 71) + 1;
    EXPECT_FALSE(fits_machine_words(inst));
    auto r = solve(inst);
    ASSERT_EQ(r.result.status, Status::Optimal);
    // (4, 0) costs 2^72, (0, 2) costs 2^72 + 2, (2, 1) costs 2^72 + 1
    EXPECT_EQ(r.result.solution->x, vec<BigInt>({4, 0}));
    EXPECT_EQ(r.result.solution->objective, BigInt(1) << 72);
}
