#include <gtest/gtest.h>

#include "helpers.hpp"
#include "ilpspace/oracles.hpp"
#include "ilpspace/smalldim.hpp"

using namespace ilpspace;
using namespace ilpspace::testing;

namespace {

MaybeSolution<I64> fixed(const Instance<I64>& inst, std::vector<std::size_t> cols,
                         FixedSupportMethod method = FixedSupportMethod::Auto) {
    Metrics metrics;
    FixedSupportOptions options;
    options.method = method;
    return solve_fixed_support(inst, cols, metrics, options);
}

}  // namespace

TEST(SigmaBound, FormulaValues) {
    EXPECT_EQ(compute_sigma_bound(1, 2, 2, 4), 192);
    EXPECT_EQ(compute_sigma_bound(1, 1, 2, 0), 16);
    EXPECT_EQ(compute_sigma_bound(2, 2, 3, 5), 300000);
}

TEST(SigmaBound, GeometricBoundCoversSmallOptimum) {
    auto inst = make({{1, 2}}, {4}, {1, 1});
    BigInt geo = geometric_sigma_bound(inst);
    EXPECT_GE(geo, 4);
    EXPECT_LE(geo, compute_sigma_bound(inst));
}

TEST(Truncate, KeepsColumnsAndReembeds) {
    auto inst = make({{1, 2, 3}, {4, 5, 6}}, {1, 2}, {7, 8, 9});
    std::vector<std::size_t> cols{0, 2};
    auto local = truncate(inst, std::span<const std::size_t>(cols));
    ASSERT_EQ(local.n, 2u);
    EXPECT_EQ(local.at(1, 1), 6);
    EXPECT_EQ(local.c, vec({7, 9}));
    Solution<I64> s{vec({5, 6}), 3};
    auto full = embed(s, std::span<const std::size_t>(cols), 3);
    EXPECT_EQ(full.x, vec({5, 0, 6}));
}

TEST(SolveFixedSupport, Examples) {
    auto r = fixed(make({{1, 2}}, {4}, {1, 1}), {1});
    ASSERT_TRUE(r);
    EXPECT_EQ(r->x, vec({0, 2}));

    r = fixed(make({{1, 2}}, {3}, {1, 1}), {0, 1});
    ASSERT_TRUE(r);
    EXPECT_EQ(r->x, vec({1, 1}));

    EXPECT_FALSE(fixed(make({{2, 1}}, {5}, {1, 1}), {0}));
}

TEST(SolveFixedSupport, EmptySupport) {
    EXPECT_TRUE(fixed(make({{1, 2}}, {0}, {1, 1}), {}));
    EXPECT_FALSE(fixed(make({{1, 2}}, {1}, {1, 1}), {}));
}

// Both methods agree with brute force restricted to the same columns, and
// the restricted optimum re-embeds to the lex-min order of the parent.
TEST(SolveFixedSupport, MethodsAgreeWithRestrictedOracle) {
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        auto inst = small_instance(1 + seed % 3, seed);
        if (inst.n < 2) continue;
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < inst.n; ++j)
            if ((seed >> j) & 1U) cols.push_back(j);
        if (cols.empty()) cols.push_back(0);
        auto local = truncate(inst, std::span<const std::size_t>(cols));
        if (simplex_solve(local).status != LPStatus::Optimal) continue;
        auto expected = oracle_solve(local);
        ++checked;
        for (auto method : {FixedSupportMethod::Branch, FixedSupportMethod::Enumerate}) {
            if (method == FixedSupportMethod::Branch &&
                estimate_branch_nodes(local, fixed_support_sigma(local), cols.size()) > 2e5)
                continue;
            auto got = fixed(inst, cols, method);
            ASSERT_EQ(bool(got), expected.status == Status::Optimal) << "seed " << seed;
            if (got) {
                auto want = embed(*expected.solution, std::span<const std::size_t>(cols), inst.n);
                EXPECT_EQ(got->x, want.x) << "seed " << seed;
            }
        }
    }
    EXPECT_GT(checked, 40);
}

TEST(SigmaBound, CoversOracleOptima) {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        auto inst = small_instance(1 + seed % 3, seed);
        auto expected = oracle_solve(inst);
        if (expected.status != Status::Optimal) continue;
        auto xs = expected.solution->x;
        auto cols = support<I64>(xs);
        if (cols.empty()) continue;
        auto local = truncate(inst, std::span<const std::size_t>(cols));
        EXPECT_LE(BigInt(norm1<I64>(xs)), compute_sigma_bound(local)) << "seed " << seed;
        EXPECT_LE(BigInt(norm1<I64>(xs)), geometric_sigma_bound(local)) << "seed " << seed;
    }
}
