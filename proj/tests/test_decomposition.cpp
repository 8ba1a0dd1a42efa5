#include <gtest/gtest.h>

#include <random>

#include "zsr/decomposition.hpp"
#include "zsr/errors.hpp"

using namespace zsr;

namespace {

std::vector<std::int64_t> random_sizes(std::mt19937_64& rng, std::int64_t total) {
    std::vector<std::int64_t> sizes;
    while (total > 0) {
        const std::int64_t s = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(std::min<std::int64_t>(total, 9)));
        sizes.push_back(s);
        total -= s;
    }
    return sizes;
}

}  // namespace

TEST(Baranyai, OneFactorizationOfK6) {
    const std::vector<std::int64_t> sizes(5, 3);
    const auto d = baranyai_partition(6, 2, sizes);
    EXPECT_TRUE(verify_decomposition(d));
    for (const auto& p : d.parts) EXPECT_TRUE(classify_family(p).is_matching);
}

TEST(Baranyai, SingletonsAndWhole) {
    const std::vector<std::int64_t> ones(4, 1);
    EXPECT_TRUE(verify_decomposition(baranyai_partition(4, 3, ones)));
    const std::vector<std::int64_t> whole = {6};
    const auto d = baranyai_partition(4, 2, whole);
    ASSERT_EQ(d.parts.size(), 1U);
    EXPECT_EQ(d.parts[0].size(), 6U);
}

TEST(Baranyai, RandomSizeVectors) {
    std::mt19937_64 rng(2024);
    for (int n = 2; n <= 8; ++n)
        for (int r = 2; r <= std::min(n, 4); ++r)
            for (int trial = 0; trial < 10; ++trial) {
                const auto sizes = random_sizes(rng, static_cast<std::int64_t>(binomial(n, r)));
                const auto d = baranyai_partition(n, r, sizes, rng());
                const auto check = verify_decomposition(d);
                EXPECT_TRUE(check) << "n=" << n << " r=" << r << ": " << check.violation;
                EXPECT_EQ(d.sizes, sizes);
            }
}

TEST(Baranyai, SeedIsDeterministic) {
    const std::vector<std::int64_t> sizes = {4, 4, 4, 4, 4};
    EXPECT_EQ(baranyai_partition(6, 3, sizes, 9), baranyai_partition(6, 3, sizes, 9));
}

TEST(Baranyai, BadSizes) {
    const std::vector<std::int64_t> wrong = {3, 2};
    EXPECT_THROW(baranyai_partition(4, 2, wrong), DomainError);
    const std::vector<std::int64_t> negative = {7, -1};
    EXPECT_THROW(baranyai_partition(4, 2, negative), DomainError);
    const std::vector<std::int64_t> ok = {1};
    EXPECT_THROW(baranyai_partition(1, 2, ok), DomainError);
}

TEST(Matchings, Examples) {
    const auto d4 = matching_decomposition(4, 2);
    EXPECT_EQ(d4.parts.size(), 3U);
    for (const auto& p : d4.parts) EXPECT_EQ(p.size(), 2U);
    EXPECT_TRUE(verify_decomposition(d4));

    const auto d2 = matching_decomposition(2, 2);
    ASSERT_EQ(d2.parts.size(), 1U);
    EXPECT_EQ(d2.parts[0].size(), 1U);

    const auto d63 = matching_decomposition(6, 3);
    EXPECT_EQ(d63.parts.size(), 10U);
    for (const auto& p : d63.parts) EXPECT_EQ(p.size(), 2U);
}

TEST(Matchings, AllSmallAmbients) {
    for (int n = 2; n <= 10; ++n)
        for (int r : {2, 3}) {
            if (n < r) continue;
            const auto d = matching_decomposition(n, r);
            const auto check = verify_decomposition(d);
            EXPECT_TRUE(check) << "n=" << n << " r=" << r << ": " << check.violation;
            EXPECT_EQ(static_cast<std::int64_t>(d.parts.size()), matching_part_count(n, r));
            const std::int64_t total = static_cast<std::int64_t>(binomial(n, r));
            const std::int64_t per = n / r;
            EXPECT_EQ(matching_part_count(n, r), (total + per - 1) / per);
            for (std::size_t j = 0; j < d.parts.size(); ++j) {
                EXPECT_TRUE(classify_family(d.parts[j]).is_matching);
                if (j + 1 < d.parts.size()) EXPECT_EQ(static_cast<std::int64_t>(d.parts[j].size()), per);
            }
        }
}

TEST(Verify, DegreeWindowViolation) {
    Decomposition d{4, 2, {2, 4}, {}};
    d.parts.emplace_back(4, 2, std::vector<Edge>{Edge({0, 1}), Edge({0, 2})});
    d.parts.emplace_back(4, 2, std::vector<Edge>{Edge({0, 3}), Edge({1, 2}), Edge({1, 3}), Edge({2, 3})});
    const auto check = verify_decomposition(d);
    EXPECT_FALSE(check);
    EXPECT_NE(check.violation.find("part 1 not within degree bounds"), std::string::npos) << check.violation;
    EXPECT_NE(check.violation.find("vertex 0 has degree 2"), std::string::npos) << check.violation;
}

TEST(Verify, DoubleCoverage) {
    Decomposition d{3, 2, {2, 1}, {}};
    d.parts.emplace_back(3, 2, std::vector<Edge>{Edge({0, 1}), Edge({1, 2})});
    d.parts.emplace_back(3, 2, std::vector<Edge>{Edge({0, 1})});
    const auto check = verify_decomposition(d);
    EXPECT_FALSE(check);
    EXPECT_NE(check.violation.find("not a partition"), std::string::npos) << check.violation;
}

// Any intersecting family meets a matching in at most one edge.
TEST(Matchings, IntersectingMeetsMatchingOnce) {
    for (auto [n, r] : {std::pair{6, 2}, std::pair{6, 3}, std::pair{7, 3}}) {
        const auto d = matching_decomposition(n, r);
        const auto edges = all_edges(n, r);
        for (std::size_t a = 0; a < edges.size(); ++a)
            for (std::size_t b = a + 1; b < edges.size(); ++b) {
                if (!(edges[a].mask() & edges[b].mask())) continue;
                // {a, b} is intersecting; no matching part may hold both.
                for (const auto& p : d.parts) {
                    int hits = 0;
                    for (const auto& e : p.edges()) hits += (e == edges[a]) + (e == edges[b]);
                    EXPECT_LE(hits, 1);
                }
            }
    }
}
