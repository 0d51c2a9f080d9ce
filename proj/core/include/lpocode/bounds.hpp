#pragma once

// Bounds on L(W, n, w), bound tables, and critical values derived from them.

#include <cstdint>
#include <optional>
#include <vector>

#include "lpocode/numeric.hpp"

namespace lpocode {

struct BoundRecord {
    int n = 0;
    int w = 0;
    int max_outdegree = 0;
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    std::optional<std::uint64_t> exact;
};

/// Closed forms for w in {1, 2, n - 2, n - 1}; absent otherwise.
std::optional<std::uint64_t> boundary_exact(int n, int w, int max_outdegree);

/// Column double-counting recursion, anchored at the closed forms and at
/// C(n, w) once 2W >= w(n - w). Never exceeds C(n, w).
std::uint64_t johnson_upper(int n, int w, int max_outdegree);

/// ceil(C(n, w) / (n - 2W)) when n >= 4W.
std::optional<std::uint64_t> gs_lower(int n, int w, int max_outdegree);

/// Best lower bound available without enumeration: closed forms, the tau
/// bound at any W' <= W it applies to, and C(n, w) when every word is light.
std::uint64_t lower_bound(int n, int w, int max_outdegree);

/// Exact L when known without search (closed forms or 2W >= w(n - w)).
std::optional<std::uint64_t> known_exact(int n, int w, int max_outdegree);

struct Range {
    int first = 0;
    int last = 0;
};

/// Rows for every n, W in range and w in range with 0 < w <= n / 2 (the rows
/// for w > n / 2 follow by complement symmetry). With `exact_when_small`,
/// exact values are searched for when C(n, w) <= kExactSearchLimit.
std::vector<BoundRecord> assemble_table(Range n_range, Range w_range, Range outdegree_range,
                                        bool exact_when_small);

enum class BoundKind { lower, upper, exact };

/// Largest W with bound(W, n, w) / C(n, w) < alpha, scanning upward from
/// W = 0 and stopping at the first failure. `exact` throws ResourceError when
/// L is unknown and C(n, w) exceeds kExactSearchLimit.
std::optional<int> lightcode_critical(const Rational& alpha, int n, int w, BoundKind kind);

} // namespace lpocode
