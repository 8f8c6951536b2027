#include <gtest/gtest.h>

#include "helpers.hpp"
#include "ilpspace/generate.hpp"
#include "ilpspace/io.hpp"

using namespace ilpspace;
using namespace ilpspace::testing;

TEST(Parse, BasicInstance) {
    auto inst = parse_instance_text("1 2\n1 2\n4\n1 1\n");
    EXPECT_EQ(inst.m, 1u);
    EXPECT_EQ(inst.n, 2u);
    EXPECT_EQ(inst.a, vec<BigInt>({1, 2}));
    EXPECT_EQ(inst.b, vec<BigInt>({4}));
    EXPECT_EQ(inst.c, vec<BigInt>({1, 1}));
    EXPECT_EQ(inst.delta, 2);
}

TEST(Parse, CommentsAndSingleVariable) {
    auto inst = parse_instance_text("# comment\n1 1\n2\n5\n0\n");
    EXPECT_EQ(inst.n, 1u);
    EXPECT_EQ(inst.at(0, 0), 2);
    EXPECT_EQ(inst.b[0], 5);
}

TEST(Parse, ShortRowIsReported) {
    try {
        parse_instance_text("1 2\n1\n4\n1 1\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("row 1: expected 2 entries, found 1"), std::string::npos) << e.what();
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
}

TEST(Parse, Errors) {
    EXPECT_THROW(parse_instance_text(""), ParseError);
    EXPECT_THROW(parse_instance_text("1 2\n1 x\n4\n1 1\n"), ParseError);
    EXPECT_THROW(parse_instance_text("1 2\n1 2\n4 4\n1 1\n"), ParseError);
    EXPECT_THROW(parse_instance_text("1 2\n1 2\n4\n1 1\ndelta 1\n"), ParseError);
    EXPECT_THROW(parse_instance_text("1 2\n1 5\n4\n1 1\ndelta 3\n"), ParseError);
    EXPECT_THROW(parse_instance_text("1 2\n1 2\n4\n1 1\n7\n"), ParseError);
    EXPECT_THROW(parse_instance_text("0 2\n"), ParseError);
}

TEST(Parse, ExplicitDeltaAndHugeValues) {
    auto inst = parse_instance_text("1 2\n1 -3\n123456789012345678901234567890\n1 1\ndelta 9\n");
    EXPECT_EQ(inst.delta, 9);
    EXPECT_EQ(inst.b[0], BigInt("123456789012345678901234567890"));
}

TEST(Format, RoundTripsGeneratedInstances) {
    for (auto family : {Family::General, Family::Nonneg, Family::Knapsack}) {
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            GeneratorParams p;
            p.seed = seed;
            p.family = family;
            p.m = family == Family::Knapsack ? 1 : 1 + seed % 3;
            p.n = 1 + seed % 6;
            auto inst = generate_instance(p);
            auto back = parse_instance_text(format_instance(inst, "round trip"));
            EXPECT_EQ(back.m, inst.m);
            EXPECT_EQ(back.n, inst.n);
            EXPECT_EQ(back.a, inst.a);
            EXPECT_EQ(back.b, inst.b);
            EXPECT_EQ(back.c, inst.c);
            EXPECT_EQ(back.delta, inst.delta);
        }
    }
}

TEST(Format, KeepsDeclaredDelta) {
    auto inst = parse_instance_text("1 1\n1\n1\n1\ndelta 5\n");
    EXPECT_EQ(parse_instance_text(format_instance(inst)).delta, 5);
}

TEST(Generate, FamiliesMeetTheirContracts) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        GeneratorParams p;
        p.seed = seed;
        p.m = 2;
        p.n = 4;
        p.family = Family::Nonneg;
        auto nonneg = generate_instance(p);
        for (std::size_t j = 0; j < p.n; ++j) {
            bool nonzero = false;
            for (std::size_t i = 0; i < p.m; ++i) {
                EXPECT_GE(nonneg.at(i, j), 0);
                nonzero = nonzero || nonneg.at(i, j) != 0;
            }
            EXPECT_TRUE(nonzero);
        }
        p.m = 1;
        p.family = Family::Knapsack;
        for (const auto& v : generate_instance(p).a) EXPECT_GE(v, 1);
    }
}

TEST(Generate, SameSeedSameInstance) {
    GeneratorParams p;
    p.seed = 99;
    auto a = generate_instance(p), b = generate_instance(p);
    EXPECT_EQ(a.a, b.a);
    EXPECT_EQ(a.b, b.b);
    EXPECT_EQ(a.c, b.c);
}

TEST(ResultDocument, OptimalDocumentIsConsistent) {
    auto inst = parse_instance_text("1 2\n1 2\n4\n1 1\n");
    auto report = solve(inst);
    auto doc = result_document(inst, report);
    EXPECT_EQ(doc["status"], "OPTIMAL");
    EXPECT_EQ(doc["objective"], 2);
    EXPECT_EQ(doc["gamma"], 16);
    EXPECT_FALSE(doc["metrics"].contains("elapsed_ms"));
    EXPECT_TRUE(document_is_consistent(inst, doc));
    EXPECT_TRUE(result_document(inst, report, {true})["metrics"].contains("elapsed_ms"));

    doc["x"][0] = 1;
    EXPECT_FALSE(document_is_consistent(inst, doc));
}

TEST(ResultDocument, LargeValuesBecomeStrings) {
    BigInt huge = BigInt(1) << 80;
    EXPECT_TRUE(to_json(huge).is_string());
    EXPECT_EQ(from_json(to_json(huge)), huge);
    EXPECT_TRUE(to_json(BigInt(-5)).is_number_integer());
}
