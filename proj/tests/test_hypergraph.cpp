#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "zsr/errors.hpp"
#include "zsr/hypergraph.hpp"

using namespace zsr;

TEST(Colex, Examples) {
    EXPECT_EQ(edge_rank(Edge({0, 1}), 4), 0);
    EXPECT_EQ(edge_rank(Edge({2, 3}), 4), 5);
    EXPECT_EQ(edge_unrank(0, 5, 3).vertices(), std::vector<int>({0, 1, 2}));
}

TEST(Colex, OrderOfPairs) {
    const auto e = all_edges(4, 2);
    const std::vector<std::vector<int>> expect = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
    ASSERT_EQ(e.size(), expect.size());
    for (std::size_t i = 0; i < e.size(); ++i) EXPECT_EQ(e[i].vertices(), expect[i]);
}

TEST(Colex, RoundTrip) {
    for (int n = 1; n <= 12; ++n)
        for (int r = 1; r <= std::min(n, 4); ++r) {
            const auto total = static_cast<std::int64_t>(binomial(n, r));
            for (std::int64_t k = 0; k < total; ++k) {
                const Edge e = edge_unrank(k, n, r);
                EXPECT_EQ(e.arity(), r);
                EXPECT_LT(e.max_vertex(), n);
                EXPECT_EQ(edge_rank(e, n), k);
            }
        }
}

TEST(Colex, OutOfRange) {
    EXPECT_THROW(edge_unrank(6, 4, 2), DomainError);
    EXPECT_THROW(edge_unrank(-1, 4, 2), DomainError);
    EXPECT_THROW(edge_rank(Edge({1, 4}), 4), DomainError);
    EXPECT_THROW(Edge({2, 1}), StructuralError);
}

TEST(Binomial, Values) {
    EXPECT_EQ(binomial(6, 3), 20U);
    EXPECT_EQ(binomial(3, 5), 0U);
    EXPECT_EQ(binomial(62, 31), 465428353255261088ULL);
}

TEST(Star, Sizes) {
    const auto s = star_edges(4, 2, 0);
    ASSERT_EQ(s.size(), 3U);
    EXPECT_EQ(s.edges()[0].vertices(), std::vector<int>({0, 1}));
    EXPECT_EQ(s.edges()[2].vertices(), std::vector<int>({0, 3}));
    EXPECT_EQ(star_edges(4, 3, 0).size(), 3U);
    EXPECT_EQ(star_edges(5, 2, 4).size(), 4U);
    for (int n = 2; n <= 9; ++n)
        for (int r = 2; r <= std::min(n, 4); ++r)
            for (int v = 0; v < n; ++v) EXPECT_EQ(star_edges(n, r, v).size(), binomial(n - 1, r - 1));
}

TEST(Classify, Examples) {
    const auto star = classify_family(EdgeFamily(4, 2, {Edge({0, 1}), Edge({0, 2}), Edge({0, 3})}));
    EXPECT_TRUE(star.is_hyperstar);
    EXPECT_TRUE(star.is_intersecting);
    ASSERT_TRUE(star.delta_core.has_value());
    EXPECT_EQ(*star.delta_core, std::vector<int>({0}));

    const auto match = classify_family(EdgeFamily(4, 2, {Edge({0, 1}), Edge({2, 3})}));
    EXPECT_TRUE(match.is_matching);
    ASSERT_TRUE(match.delta_core.has_value());
    EXPECT_TRUE(match.delta_core->empty());

    const auto tri = classify_family(EdgeFamily(4, 2, {Edge({0, 1}), Edge({1, 2}), Edge({0, 2})}));
    EXPECT_TRUE(tri.is_intersecting);
    EXPECT_FALSE(tri.is_hyperstar);
    EXPECT_FALSE(tri.delta_core.has_value());

    const auto single = classify_family(EdgeFamily(4, 2, {Edge({1, 2})}));
    EXPECT_TRUE(single.is_matching && single.is_intersecting && single.is_hyperstar);
    EXPECT_TRUE(single.core_undetermined);
}

TEST(Classify, DuplicateEdgesRejected) {
    EXPECT_THROW(EdgeFamily(4, 2, {Edge({0, 1}), Edge({0, 1})}), StructuralError);
}

// Hyperstar => intersecting, and a delta-system with nonempty core is a hyperstar.
TEST(Classify, ImplicationsBySmallEnumeration) {
    for (auto [n, r] : {std::pair{6, 2}, std::pair{5, 3}}) {
        const auto edges = all_edges(n, r);
        const int e = static_cast<int>(edges.size());
        for (int a = 0; a < e; ++a)
            for (int b = a + 1; b < e; ++b)
                for (int c = b; c < e; ++c) {
                    std::vector<Edge> fam = {edges[a], edges[b]};
                    if (c > b) fam.push_back(edges[c]);
                    const auto fc = classify_family(EdgeFamily(n, r, fam));
                    if (fc.is_hyperstar) EXPECT_TRUE(fc.is_intersecting);
                    if (fc.delta_core && !fc.delta_core->empty()) EXPECT_TRUE(fc.is_hyperstar);
                    if (fc.delta_core && fc.delta_core->empty()) EXPECT_TRUE(fc.is_matching);
                    std::vector<std::uint64_t> masks;
                    for (const auto& x : fam) masks.push_back(x.mask());
                    EXPECT_EQ(fc.is_hyperstar, oracle::family_is({FamilyKind::hyperstar, 0}, masks));
                    EXPECT_EQ(fc.is_intersecting, oracle::family_is({FamilyKind::intersecting, 0}, masks));
                    EXPECT_EQ(fc.is_matching, oracle::family_is({FamilyKind::matching, 0}, masks));
                }
    }
}
