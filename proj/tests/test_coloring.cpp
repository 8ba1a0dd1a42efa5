#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "zsr/coloring.hpp"
#include "zsr/errors.hpp"

using namespace zsr;

namespace {

const FamilySpec kStar{FamilyKind::hyperstar, 0};
const FamilySpec kInter{FamilyKind::intersecting, 0};
const FamilySpec kMatch{FamilyKind::matching, 0};

}  // namespace

TEST(FamilySpecText, RoundTrip) {
    for (const char* t : {"hyperstar", "intersecting", "matching", "delta(2)"})
        EXPECT_EQ(FamilySpec::parse(t).name(), t);
    EXPECT_EQ(FamilySpec::parse("delta:1"), (FamilySpec{FamilyKind::delta, 1}));
    EXPECT_THROW(FamilySpec::parse("clique"), DomainError);
    EXPECT_THROW(FamilySpec::parse("delta()"), DomainError);
}

TEST(ColoringType, SizeChecked) {
    EXPECT_THROW(Coloring(Group::parse("2"), 4, 2, std::vector<int>(5, 0)), StructuralError);
    EXPECT_THROW(Coloring(Group::parse("2"), 3, 2, std::vector<int>{0, 1, 2}), StructuralError);
    EXPECT_EQ(Coloring(Group::parse("2"), 2, 3).num_edges(), 0U);
}

TEST(FindFamily, AllZeroIntersecting) {
    const Coloring c(Group::parse("2"), 4, 3);
    const auto res = verify_no_zero_sum_family(c, kInter, 2);
    ASSERT_EQ(res.status, FamilyStatus::witness_found);
    EXPECT_EQ(res.witness->size(), 2U);
    // Lexicographically least pair of colex ranks.
    EXPECT_EQ(res.witness->edges()[0].vertices(), std::vector<int>({0, 1, 2}));
    EXPECT_EQ(res.witness->edges()[1].vertices(), std::vector<int>({0, 1, 3}));
}

TEST(FindFamily, HyperstarWitnessIsLowestCentre) {
    // K_4 over Z_2, all zero: centre 0, edges 01 and 02.
    const Coloring c(Group::parse("2"), 4, 2);
    const auto res = find_zero_sum_family(c, kStar, 2);
    ASSERT_EQ(res.status, FamilyStatus::witness_found);
    EXPECT_EQ(res.witness->edges()[0].vertices(), std::vector<int>({0, 1}));
    EXPECT_EQ(res.witness->edges()[1].vertices(), std::vector<int>({0, 2}));
}

TEST(FindFamily, MatchesOracleOnRandomColorings) {
    std::mt19937 rng(11);
    struct Case {
        const char* group;
        int n, r, m;
        FamilySpec spec;
    };
    const std::vector<Case> cases = {
        {"2", 5, 2, 2, kInter}, {"3", 5, 2, 3, kInter}, {"2", 6, 2, 2, kMatch},  {"2", 6, 3, 2, kMatch},
        {"2", 5, 3, 2, kInter}, {"3", 6, 3, 3, kInter}, {"2,2", 5, 2, 2, kStar}, {"4", 6, 2, 4, kStar},
        {"2", 6, 3, 2, {FamilyKind::delta, 1}}, {"3", 7, 3, 3, {FamilyKind::delta, 1}},
        {"2", 6, 3, 4, {FamilyKind::delta, 2}}, {"3", 7, 2, 3, kMatch},
    };
    for (const auto& cs : cases) {
        const Group g = Group::parse(cs.group);
        const int e = static_cast<int>(binomial(cs.n, cs.r));
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<int> colors(e);
            for (auto& x : colors) x = static_cast<int>(rng() % g.order());
            const Coloring c(g, cs.n, cs.r, colors);
            const auto res = verify_no_zero_sum_family(c, cs.spec, cs.m);
            ASSERT_NE(res.status, FamilyStatus::inconclusive);
            EXPECT_EQ(res.status == FamilyStatus::witness_found,
                      oracle::has_zero_sum_family(g, cs.n, cs.r, colors, cs.spec, cs.m))
                << cs.spec.name() << " n=" << cs.n << " r=" << cs.r;
        }
    }
}

// The star DP answers exactly what full family enumeration answers.
TEST(FindFamily, HyperstarFastPathExhaustive) {
    struct Case {
        const char* group;
        int m;
    };
    for (const Case& cs : {Case{"2", 2}, Case{"2", 4}, Case{"3", 3}}) {
        const Group g = Group::parse(cs.group);
        for (int n = 2; n <= 5; ++n) {
            const int e = static_cast<int>(binomial(n, 2));
            std::vector<int> colors(e, 0);
            while (true) {
                const Coloring c(g, n, 2, colors);
                const bool dp = find_zero_sum_family(c, kStar, cs.m).status == FamilyStatus::witness_found;
                ASSERT_EQ(dp, oracle::has_zero_sum_family(g, n, 2, colors, kStar, cs.m)) << "n=" << n;
                int i = e - 1;
                while (i >= 0 && colors[i] == g.order() - 1) --i;
                if (i < 0) break;
                ++colors[i];
                for (int j = i + 1; j < e; ++j) colors[j] = 0;
            }
        }
    }
}

TEST(FindFamily, ParallelMatchesSerial) {
    std::mt19937 rng(5);
    const Group g = Group::parse("3");
    SearchLimits par;
    par.jobs = 4;
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<int> colors(binomial(7, 3));
        for (auto& x : colors) x = static_cast<int>(rng() % 3);
        const Coloring c(g, 7, 3, colors);
        for (const FamilySpec& spec : {kInter, kMatch, FamilySpec{FamilyKind::delta, 1}}) {
            const auto a = find_zero_sum_family(c, spec, 3);
            const auto b = find_zero_sum_family(c, spec, 3, par);
            EXPECT_EQ(a.status, b.status);
            EXPECT_EQ(a.witness, b.witness);
        }
    }
}

TEST(FindFamily, BudgetGivesInconclusive) {
    const Coloring c(Group::parse("2"), 9, 3, std::vector<int>(binomial(9, 3), 1));
    SearchLimits tight;
    tight.max_nodes = 3;
    EXPECT_EQ(find_zero_sum_family(c, kMatch, 3, tight).status, FamilyStatus::inconclusive);
}

TEST(LowerColoring, Z3Graph) {
    const auto mc = theorem1_lower_coloring(Group::parse("3"), 1, 2, LowerVariant::minus_two);
    EXPECT_EQ(mc.s, 5);
    EXPECT_EQ(mc.omega, 6);
    EXPECT_EQ(mc.coloring.n(), 4);
    EXPECT_EQ(mc.t, 3);
    EXPECT_EQ(mc.part_colors, std::vector<int>({0, 0, 1}));
    EXPECT_EQ(verify_no_zero_sum_family(mc.coloring, kInter, 3).status, FamilyStatus::certified_absent);
    EXPECT_EQ(verify_no_zero_sum_family(mc.coloring, kStar, 3).status, FamilyStatus::certified_absent);
}

TEST(LowerColoring, DegenerateAmbients) {
    const auto a = theorem1_lower_coloring(Group::parse("2"), 1, 3, LowerVariant::minus_one);
    EXPECT_EQ(a.coloring.n(), 3);
    EXPECT_EQ(a.coloring.num_edges(), 1U);
    EXPECT_EQ(verify_no_zero_sum_family(a.coloring, kInter, 2).status, FamilyStatus::certified_absent);

    const auto b = theorem1_lower_coloring(Group::parse("2"), 1, 2, LowerVariant::minus_two);
    EXPECT_EQ(b.coloring.n(), 2);
    EXPECT_EQ(verify_no_zero_sum_family(b.coloring, kInter, 2).status, FamilyStatus::certified_absent);
}

TEST(LowerColoring, MinusOneNeedsDivisibility) {
    // Z_3, r = 2: omega = 6, r does not divide 5.
    EXPECT_THROW(theorem1_lower_coloring(Group::parse("3"), 1, 2, LowerVariant::minus_one), DomainError);
}

TEST(LowerColoring, SoundOnSmallGrid) {
    struct Case {
        const char* group;
        int k, r;
    };
    for (const Case& cs : {Case{"2", 1, 2}, Case{"3", 1, 2}, Case{"2", 1, 3}, Case{"2", 2, 2}, Case{"2,2", 1, 2},
                           Case{"4", 1, 2}, Case{"3", 1, 3}, Case{"2", 2, 3}}) {
        const Group g = Group::parse(cs.group);
        const auto mc = theorem1_lower_coloring(g, cs.k, cs.r, LowerVariant::minus_two);
        EXPECT_LT(mc.t, mc.s);
        const int m = cs.k * g.exponent();
        const auto res = verify_no_zero_sum_family(mc.coloring, kInter, m);
        EXPECT_EQ(res.status, FamilyStatus::certified_absent) << g.name() << " r=" << cs.r;
        // Intersecting families meet each part at most once, so their colors
        // are drawn from distinct terms of the witness.
        if (mc.coloring.num_edges() > 0) EXPECT_EQ(static_cast<std::int64_t>(mc.part_colors.size()), mc.t);
    }
}

TEST(DeltaLower, Examples) {
    const auto p = delta_lower_coloring(Group::parse("2"), 2, 0, 2);
    EXPECT_EQ(p.coloring.n(), 4);
    EXPECT_EQ(p.potential.values, std::vector<int>({1, 0, 0, 0}));
    EXPECT_EQ(verify_no_zero_sum_family(p.coloring, {FamilyKind::delta, 0}, 2).status, FamilyStatus::certified_absent);

    const auto z3 = delta_lower_coloring(Group::parse("3"), 2, 0, 3);
    EXPECT_EQ(z3.coloring.n(), 7);
    EXPECT_FALSE(has_nonempty_zero_sum(GSeq(Group::parse("3"), {z3.potential.values[0], z3.potential.values[1]})));
    EXPECT_EQ(verify_no_zero_sum_family(z3.coloring, {FamilyKind::delta, 0}, 3).status, FamilyStatus::certified_absent);
}

TEST(DeltaLower, TrivialGroupIsDegenerate) {
    // D = 1 gives n = (r-q)m - 1 < the size a family needs, and all colors are 0.
    const auto p = delta_lower_coloring(Group(), 2, 0, 3);
    for (int c : p.coloring.color_ranks()) EXPECT_EQ(c, 0);
    EXPECT_THROW(delta_lower_coloring(Group(), 2, 1, 1), DomainError);
}

TEST(DeltaLower, SoundOnSmallGrid) {
    struct Case {
        const char* group;
        int r, q, m;
    };
    for (const Case& cs : {Case{"2", 2, 0, 2}, Case{"3", 2, 0, 3}, Case{"2", 3, 1, 2}, Case{"2", 3, 0, 2},
                           Case{"2,2", 2, 0, 4}, Case{"2", 2, 1, 2}}) {
        const Group g = Group::parse(cs.group);
        const auto p = delta_lower_coloring(g, cs.r, cs.q, cs.m);
        EXPECT_EQ(verify_no_zero_sum_family(p.coloring, {FamilyKind::delta, cs.q}, cs.m).status,
                  FamilyStatus::certified_absent)
            << g.name() << " r=" << cs.r << " q=" << cs.q;
    }
}
