#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "ilpspace/core.hpp"

using namespace ilpspace;
using namespace ilpspace::testing;

TEST(GammaBound, MatchesClosedForm) {
    EXPECT_EQ(gamma_bound(1, 2), 16u);
    EXPECT_EQ(gamma_bound(3, 8), 56u);
    EXPECT_EQ(gamma_bound(2, 2), 28u);
    EXPECT_EQ(gamma_bound(3, 3), 45u);
}

TEST(GammaBound, RejectsDeltaBelowTwo) {
    EXPECT_THROW(gamma_bound(1, 1), std::invalid_argument);
    EXPECT_THROW(gamma_bound(0, 2), std::invalid_argument);
}

TEST(GammaBound, MonotoneInRowsAndDelta) {
    for (std::size_t m = 1; m <= 6; ++m)
        for (int d = 2; d <= 40; ++d) {
            EXPECT_LE(gamma_bound(m, d), gamma_bound(m, d + 1));
            EXPECT_LT(gamma_bound(m, d), gamma_bound(m + 1, d));
        }
}

TEST(GammaBound, HugeDelta) {
    // log2 delta = 200 exactly: 2*2*(1 + 200 + 2)
    BigInt delta = BigInt(1) << 200;
    EXPECT_EQ(gamma_bound(1, delta), 812u);
}

TEST(LexLess, Examples) {
    EXPECT_TRUE(lex_less(vec({0, 1}), vec({1, 0})));
    EXPECT_FALSE(lex_less(vec({1, 2}), vec({1, 2})));
    EXPECT_TRUE(lex_less(vec({1, 2, 0}), vec({1, 3, 0})));
    EXPECT_THROW(lex_less(vec({1}), vec({1, 2})), std::invalid_argument);
}

TEST(LexLess, IsAStrictTotalOrderOnSamples) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<I64> d(0, 2);
    std::vector<std::vector<I64>> pts;
    for (int k = 0; k < 60; ++k) pts.push_back({d(rng), d(rng), d(rng)});
    for (const auto& x : pts) {
        EXPECT_FALSE(lex_less(x, x));
        for (const auto& y : pts) {
            if (x != y) EXPECT_NE(lex_less(x, y), lex_less(y, x));
            for (const auto& z : pts)
                if (lex_less(x, y) && lex_less(y, z)) EXPECT_TRUE(lex_less(x, z));
        }
    }
}

TEST(LexLess, BeyondSixtyFourBits) {
    BigInt big = BigInt(1) << 100;
    std::vector<BigInt> x{big, 0}, y{big + 1, 0};
    EXPECT_TRUE(lex_less(x, y));
    EXPECT_FALSE(lex_less(y, x));
}

TEST(Better, Examples) {
    std::vector<I64> c{1, 1};
    MaybeSolution<I64> cand = make_solution<I64>(vec({0, 2}), c);
    MaybeSolution<I64> inc = make_solution<I64>(vec({1, 1}), c);
    MaybeSolution<I64> none;
    EXPECT_TRUE(better(cand, none));
    EXPECT_TRUE(better(cand, inc));
    EXPECT_FALSE(better(inc, cand));
    EXPECT_FALSE(better(none, cand));
    EXPECT_FALSE(better(none, none));
}

TEST(Better, FoldIsOrderIndependent) {
    std::vector<I64> c{2, -1, 1};
    std::vector<MaybeSolution<I64>> items;
    for (I64 a = 0; a < 3; ++a)
        for (I64 b = 0; b < 3; ++b)
            for (I64 e = 0; e < 3; ++e) items.push_back(make_solution<I64>(vec({a, b, e}), c));
    items.push_back(std::nullopt);
    auto fold = [](const std::vector<MaybeSolution<I64>>& v) {
        MaybeSolution<I64> best;
        for (const auto& s : v)
            if (better(s, best)) best = s;
        return best;
    };
    auto reference = fold(items);
    std::mt19937_64 rng(3);
    for (int round = 0; round < 20; ++round) {
        std::shuffle(items.begin(), items.end(), rng);
        EXPECT_EQ(fold(items), reference);
    }
    ASSERT_TRUE(reference);
    EXPECT_EQ(reference->x, vec({0, 2, 0}));
}

TEST(Norms, Examples) {
    auto x = vec({0, 3, 1});
    EXPECT_EQ(support<I64>(x), (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(norm0<I64>(x), 2u);
    EXPECT_EQ(norm1<I64>(x), 4);
    EXPECT_EQ(norm_inf<I64>(x), 3);

    auto zero = vec({0, 0});
    EXPECT_TRUE(support<I64>(zero).empty());
    EXPECT_EQ(norm0<I64>(zero), 0u);
    EXPECT_EQ(norm1<I64>(zero), 0);
    EXPECT_EQ(norm_inf<I64>(zero), 0);

    auto five = vec({5});
    EXPECT_EQ(support<I64>(five), (std::vector<std::size_t>{0}));
    EXPECT_EQ(norm0<I64>(five), 1u);
    EXPECT_EQ(norm1<I64>(five), 5);
}

TEST(CheckSolution, Examples) {
    auto inst = make({{1, 2}}, {4}, {1, 1});
    EXPECT_TRUE(check_solution<I64>(inst, vec({0, 2})));
    EXPECT_FALSE(check_solution<I64>(inst, vec({1, 1})));
    EXPECT_TRUE(check_solution<I64>(inst, vec({4, 0})));
    EXPECT_FALSE(check_solution<I64>(inst, vec({-2, 3})));
}

TEST(Instance, ValidateRejectsEntriesAboveDelta) {
    auto inst = make({{1, 5}}, {4}, {1, 1});
    inst.delta = 3;
    EXPECT_THROW(inst.validate(), std::invalid_argument);
    inst.delta = 5;
    EXPECT_NO_THROW(inst.validate());
}

TEST(Instance, BigIntArithmeticIsExact) {
    BigInt huge = (BigInt(1) << 90) + 7;
    auto inst = make<BigInt>({{1, 1}}, {0}, {1, 1});
    inst.b[0] = huge;
    std::vector<BigInt> x{huge - 3, 3};
    EXPECT_TRUE(check_solution<BigInt>(inst, x));
    EXPECT_EQ(make_solution<BigInt>(x, inst.c).objective, huge);
}
