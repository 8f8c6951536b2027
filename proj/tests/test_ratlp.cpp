#include <gtest/gtest.h>

#include "helpers.hpp"
#include "ilpspace/ratlp.hpp"

using namespace ilpspace;
using namespace ilpspace::testing;

namespace {

bool satisfies(const Instance<I64>& inst, const std::vector<Rational>& x) {
    for (const auto& v : x)
        if (v < 0) return false;
    for (std::size_t i = 0; i < inst.m; ++i) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < inst.n; ++j) lhs += Rational(inst.at(i, j)) * x[j];
        if (lhs != Rational(inst.b[i])) return false;
    }
    return true;
}

}  // namespace

TEST(Simplex, PinnedVariable) {
    auto r = simplex_solve(make({{1}}, {3}, {-1}));
    ASSERT_EQ(r.status, LPStatus::Optimal);
    EXPECT_EQ(r.value, -3);
    EXPECT_EQ(r.vertex, (std::vector<Rational>{3}));
}

TEST(Simplex, UnboundedWithRay) {
    auto inst = make({{1, -1}}, {0}, {-1, -1});
    auto r = simplex_solve(inst);
    ASSERT_EQ(r.status, LPStatus::Unbounded);
    ASSERT_EQ(r.ray.size(), 2u);
    EXPECT_GT(r.ray[0], 0);
    EXPECT_EQ(r.ray[0], r.ray[1]);
    EXPECT_TRUE(satisfies(inst, r.point));
}

TEST(Simplex, NegativeRightHandSideIsInfeasible) {
    EXPECT_EQ(simplex_solve(make({{2}}, {-1}, {0})).status, LPStatus::Infeasible);
}

TEST(Simplex, FractionalVertex) {
    // 2x + 4y = 5, min x + 3y: x = 5/2
    auto r = simplex_solve(make({{2, 4}}, {5}, {1, 3}));
    ASSERT_EQ(r.status, LPStatus::Optimal);
    EXPECT_EQ(r.value, Rational(5) / 2);
}

TEST(Simplex, RedundantRowsAndDegeneracy) {
    auto inst = make({{1, 1, 0}, {2, 2, 0}, {0, 1, 1}}, {0, 0, 0}, {1, -1, 1});
    auto r = simplex_solve(inst);
    ASSERT_EQ(r.status, LPStatus::Optimal);
    EXPECT_EQ(r.value, 0);
    EXPECT_TRUE(satisfies(inst, r.vertex));
}

TEST(Simplex, ValueMatchesVertexCost) {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        auto inst = small_instance(1 + seed % 3, seed);
        auto r = simplex_solve(inst);
        if (r.status != LPStatus::Optimal) continue;
        ASSERT_TRUE(satisfies(inst, r.vertex)) << "seed " << seed;
        Rational cost = 0;
        for (std::size_t j = 0; j < inst.n; ++j) cost += Rational(inst.c[j]) * r.vertex[j];
        EXPECT_EQ(cost, r.value) << "seed " << seed;
    }
}
