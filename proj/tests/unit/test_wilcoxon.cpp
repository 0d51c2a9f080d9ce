#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "lpocode/errors.hpp"
#include "lpocode/wilcoxon.hpp"

using namespace lpocode;

TEST(QCount, Examples)
{
    EXPECT_EQ(q_count(1, 5, 1), 2);
    EXPECT_EQ(q_count(8, 4, 2), 6);
    EXPECT_EQ(q_count(-1, 4, 2), 0);
    for (int n = 2; n <= 15; ++n)
        for (int w = 1; w < n; ++w)
            EXPECT_EQ(q_count(0, n, w), 1);
    EXPECT_THROW(q_count(0, 4, 4), ParameterError);
}

TEST(Distribution, SmallCases)
{
    EXPECT_EQ(wmw_distribution(4, 2).counts, (std::vector<BigInt>{1, 1, 2, 1, 1}));
    EXPECT_EQ(wmw_distribution(2, 1).counts, (std::vector<BigInt>{1, 1}));
}

TEST(Distribution, MatchesBruteForceEnumeration)
{
    for (int n = 2; n <= 12; ++n)
        for (int w = 1; w < n; ++w) {
            const auto expected = oracle::wmw_counts(n, w);
            const auto actual = wmw_distribution(n, w).counts;
            ASSERT_EQ(actual.size(), expected.size());
            for (std::size_t k = 0; k < expected.size(); ++k)
                EXPECT_EQ(actual[k], expected[k]) << n << " " << w << " " << k;
        }
}

TEST(Distribution, SumsAndSymmetry)
{
    for (int n = 2; n <= 40; ++n)
        for (int w = 1; w <= n / 2; ++w) {
            const auto d = wmw_distribution(n, w);
            EXPECT_EQ(d.total(), binomial_big(n, w));
            for (std::size_t k = 0; k < d.counts.size(); ++k)
                EXPECT_EQ(d.counts[k], d.counts[d.counts.size() - 1 - k]);
        }
}

TEST(Distribution, ExactBeyondSixtyFourBits)
{
    const auto d = wmw_distribution(80, 40);
    EXPECT_GT(binomial_big(80, 40), BigInt(std::numeric_limits<std::uint64_t>::max()));
    EXPECT_EQ(d.total(), binomial_big(80, 40));
    EXPECT_EQ(q_count(1600, 80, 40), binomial_big(80, 40));
}

TEST(PValue, Examples)
{
    EXPECT_EQ(wmw_pvalue(0, 4, 2), Rational(1, 6));
    EXPECT_EQ(wmw_pvalue(4, 4, 2), Rational(1));
    Rational previous = 0;
    for (int e = 0; e <= 25; ++e) {
        const auto p = wmw_pvalue(e, 10, 5);
        EXPECT_GE(p, previous);
        previous = p;
    }
    EXPECT_THROW(wmw_pvalue(-1, 4, 2), ParameterError);
}

TEST(Critical, AgainstBruteForce)
{
    EXPECT_EQ(wmw_critical(Rational(1, 20), 4, 2), std::nullopt);

    // Largest W whose cumulative brute-force count stays below 5% of C(10, 5).
    const auto counts = oracle::wmw_counts(10, 5);
    std::uint64_t cumulative = 0;
    std::optional<int> expected;
    for (std::size_t W = 0; W < counts.size(); ++W) {
        cumulative += counts[W];
        if (cumulative * 20 >= 252)
            break;
        expected = static_cast<int>(W);
    }
    EXPECT_EQ(wmw_critical(Rational(1, 20), 10, 5), expected);
    EXPECT_EQ(wmw_critical(Rational(1, 20), 10, 5), 4);  // frozen from the enumeration above

    const auto median = wmw_critical(Rational(1, 2), 12, 6);
    ASSERT_TRUE(median);
    EXPECT_LT(*median, 18);
}

TEST(Critical, StrictInequality)
{
    // q_count(0, 20, 1) / C(20, 1) = 1/20 exactly, which is not below 0.05.
    EXPECT_EQ(wmw_critical(Rational(1, 20), 20, 1), std::nullopt);
    EXPECT_EQ(wmw_critical(Rational(1, 20), 21, 1), 0);
}

TEST(Grid, CellsMatchPointQueries)
{
    const auto grid = wmw_critical_grid(Rational(1, 20), 10);
    for (int ones = 1; ones <= 10; ++ones)
        for (int zeros = 1; zeros <= 10; ++zeros)
            EXPECT_EQ(grid.at(ones, zeros), wmw_critical(Rational(1, 20), ones + zeros, ones));
    EXPECT_EQ(grid.at(4, 4), 1);
    EXPECT_EQ(grid.at(5, 5), 4);
}
