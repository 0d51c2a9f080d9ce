#pragma once

// Brute-force reference computations. They share no code with the library:
// words are raw bitmasks and nothing is memoized or pruned.

#include <cstdint>
#include <utility>
#include <vector>

#include "lpocode/dataset.hpp"

namespace oracle {

/// All n-bit masks of popcount w, ascending.
std::vector<std::uint64_t> masks(int n, int w);

/// Error-count histogram of a constant learner whose score increases with
/// the row index, over every labeling with w ones.
std::vector<std::uint64_t> wmw_counts(int n, int w);

/// Largest subset of S(n, w) all of whose subsets T span at most W|T|
/// Johnson edges (Hakimi's condition for an orientation with outdegrees
/// <= W). Dynamic programme over all 2^C subsets; C(n, w) <= 22.
int max_light_subset(int n, int w, int max_outdegree);

/// Tries all 2^E orientations of the graph.
bool orientable(int vertices, const std::vector<std::pair<int, int>>& edges, int max_outdegree);

/// Score difference f(x_low) - f(x_high) of ridge regression fitted on the
/// rows in `members` with 0/1 targets from `labels`, unpenalized intercept.
/// Solves the normal equations by Gaussian elimination with partial pivoting.
double ridge_score_gap(const lpocode::Dataset& data, std::uint64_t members, std::uint64_t labels,
                       std::size_t low, std::size_t high, double lambda);

} // namespace oracle
