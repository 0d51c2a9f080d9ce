#pragma once

// Exact null distribution of the Wilcoxon-Mann-Whitney statistic, counted
// as the number of discordant (one, zero) pairs among all labelings with w
// ones of n distinct scores. This is the LPOCV error count of any constant
// learner.

#include <optional>
#include <vector>

#include "lpocode/critical_grid.hpp"
#include "lpocode/numeric.hpp"

namespace lpocode {

/// Largest n accepted by the recursion.
inline constexpr int kMaxWilcoxonSize = 400;

struct NullDistribution {
    int n = 0;
    int w = 0;
    /// counts[k] = number of labelings with exactly k errors, k = 0..w(n - w).
    std::vector<BigInt> counts;

    int max_errors() const noexcept { return w * (n - w); }
    BigInt total() const;
};

/// Number of labelings in S(n, w) with at most W errors.
BigInt q_count(int max_errors, int n, int w);

NullDistribution wmw_distribution(int n, int w);

/// q_count(errors, n, w) / C(n, w).
Rational wmw_pvalue(int errors, int n, int w);

/// Largest W with q_count(W, n, w) / C(n, w) < alpha; empty if W = 0 fails.
std::optional<int> wmw_critical(const Rational& alpha, int n, int w);

/// wmw_critical over class sizes 1..max_size on both axes.
CriticalGrid wmw_critical_grid(const Rational& alpha, int max_size);

} // namespace lpocode
