#include <gtest/gtest.h>

#include "lpocode/bounds.hpp"
#include "lpocode/codes.hpp"
#include "lpocode/errors.hpp"
#include "lpocode/wilcoxon.hpp"

using namespace lpocode;

TEST(BoundaryExact, Examples)
{
    EXPECT_EQ(boundary_exact(9, 1, 2), 5u);
    EXPECT_EQ(boundary_exact(6, 4, 1), 6u);
    EXPECT_EQ(boundary_exact(7, 3, 0), std::nullopt);
    EXPECT_EQ(boundary_exact(6, 5, 1), 3u);
}

TEST(JohnsonUpper, Examples)
{
    EXPECT_EQ(johnson_upper(5, 2, 0), 2u);
    EXPECT_EQ(johnson_upper(6, 3, 0), 4u);
    EXPECT_EQ(johnson_upper(6, 3, 9), 20u);
    EXPECT_EQ(johnson_upper(8, 4, 16), 70u);
    EXPECT_EQ(johnson_upper(7, 3, 1), johnson_upper(7, 4, 1));
}

TEST(GsLower, Examples)
{
    EXPECT_EQ(gs_lower(5, 2, 0), 2u);
    EXPECT_EQ(gs_lower(6, 3, 1), 5u);
    EXPECT_EQ(gs_lower(3, 1, 1), std::nullopt);
}

TEST(Sandwich, EveryEnumerableInstance)
{
    for (int n = 2; n <= 7; ++n)
        for (int w = 1; w < n; ++w) {
            if (binomial(n, w) > kExactSearchLimit)
                continue;
            for (int W = 0; W <= 4; ++W) {
                const auto exact = exact_L(n, w, W).size;
                if (auto gs = gs_lower(n, w, W))
                    EXPECT_LE(*gs, exact);
                EXPECT_LE(lower_bound(n, w, W), exact);
                EXPECT_GE(johnson_upper(n, w, W), exact);
                if (n <= 6)
                    EXPECT_GE(BigInt(exact), q_count(W, n, w));
            }
        }
}

TEST(AssembleTable, GridAndInvariants)
{
    const auto rows = assemble_table({3, 6}, {1, 3}, {0, 2}, true);
    EXPECT_EQ(rows.size(), 24u);
    for (const auto& row : rows) {
        EXPECT_LE(row.lower, row.upper);
        EXPECT_LE(row.upper, binomial(row.n, row.w));
        ASSERT_TRUE(row.exact);
        EXPECT_LE(row.lower, *row.exact);
        EXPECT_LE(*row.exact, row.upper);
    }
    auto find = [&](int n, int w, int W) {
        for (const auto& row : rows)
            if (row.n == n && row.w == w && row.max_outdegree == W)
                return row;
        ADD_FAILURE() << "missing row";
        return BoundRecord{};
    };
    EXPECT_EQ(find(4, 2, 0).lower, 2u);
    EXPECT_EQ(find(4, 2, 0).upper, 2u);
    EXPECT_EQ(find(4, 2, 0).exact, 2u);
    EXPECT_EQ(find(4, 2, 1).exact, 4u);
    EXPECT_EQ(find(5, 2, 1).exact, 5u);
    EXPECT_THROW(assemble_table({5, 4}, {1, 2}, {0, 1}, false), ParameterError);
}

TEST(LightcodeCritical, Examples)
{
    const Rational alpha(1, 20);
    EXPECT_EQ(lightcode_critical(alpha, 4, 2, BoundKind::exact), std::nullopt);
    // At W = 0 the tau bound is ceil(C / n) / C, roughly 1 / n.
    const std::uint64_t total = binomial(30, 15);
    EXPECT_EQ(lower_bound(30, 15, 0), (total + 29) / 30);
    EXPECT_EQ(lightcode_critical(Rational(1, 40), 30, 15, BoundKind::lower), std::nullopt);
    EXPECT_TRUE(lightcode_critical(Rational(1, 20), 30, 15, BoundKind::lower).has_value());
    const auto at_one = lightcode_critical(Rational(1), 6, 3, BoundKind::exact);
    ASSERT_TRUE(at_one);
    EXPECT_LT(*at_one, 9);
    EXPECT_THROW(lightcode_critical(alpha, 12, 6, BoundKind::exact), ResourceError);
}

TEST(LightcodeCritical, UpperIsNeverAboveExactAndMonotoneInAlpha)
{
    for (int n = 3; n <= 7; ++n)
        for (int w = 1; w < n; ++w) {
            if (binomial(n, w) > kExactSearchLimit)
                continue;
            std::optional<int> previous;
            for (int k = 1; k <= 10; ++k) {
                const Rational alpha(k, 10);
                const auto upper = lightcode_critical(alpha, n, w, BoundKind::upper);
                const auto exact = lightcode_critical(alpha, n, w, BoundKind::exact);
                if (upper)
                    EXPECT_TRUE(exact && *upper <= *exact);
                if (previous)
                    EXPECT_TRUE(upper && *upper >= *previous);
                previous = upper;
            }
        }
}

TEST(LightcodeCritical, UpperIsNeverAboveWilcoxon)
{
    const Rational alpha(1, 20);
    for (int ones = 1; ones <= 12; ++ones)
        for (int zeros = 1; zeros <= 12; ++zeros) {
            const auto light = lightcode_critical(alpha, ones + zeros, ones, BoundKind::upper);
            const auto wmw = wmw_critical(alpha, ones + zeros, ones);
            if (light)
                EXPECT_TRUE(wmw && *light <= *wmw) << ones << " " << zeros;
        }
}
