#pragma once

// Leave-pair-out cross-validation and its null distributions.

#include <cstdint>
#include <vector>

#include "lpocode/cwords.hpp"
#include "lpocode/dataset.hpp"
#include "lpocode/johnson.hpp"
#include "lpocode/learner.hpp"
#include "lpocode/numeric.hpp"

namespace lpocode {

/// 1 when the learner, trained without rows i and j, misorders them. Requires
/// labeling.test(i) and !labeling.test(j); throws ParameterError otherwise.
bool lpo_kernel(PairPredictor& predictor, std::size_t rows, const Word& labeling, int i, int j);
bool lpo_kernel(const Learner& learner, const Dataset& data, const Word& labeling, int i, int j);

struct LpoScore {
    int errors = 0;
    int pairs = 0;

    Rational u() const { return Rational(errors, pairs); }
};

LpoScore lpocv_u(PairPredictor& predictor, std::size_t rows, const Word& labeling);
LpoScore lpocv_u(const Learner& learner, const Dataset& data, const Word& labeling);

/// counts[k] = number of labelings with exactly k errors, k = 0..w(n - w).
using ErrorHistogram = std::vector<std::uint64_t>;

/// Largest C(n, w) that exact_null_distribution enumerates.
inline constexpr std::uint64_t kExactNullLimit = 1'000'000;

/// Histogram over every labeling of S(n, w), n = data.rows().
ErrorHistogram exact_null_distribution(const Learner& learner, const Dataset& data, int w);

/// Histogram over `draws` labelings drawn uniformly, draw r seeded by derive_seed(seed, r).
ErrorHistogram sampled_null_distribution(const Learner& learner, const Dataset& data, int w,
                                         std::uint64_t draws, std::uint64_t seed);

/// Permutation p-value of an observed error count: the exact fraction of
/// labelings with at most that many errors when C(n, w) <= exact_limit,
/// otherwise (1 + hits) / (draws + 1) over sampled labelings.
Rational mc_null_pvalue(const Learner& learner, const Dataset& data, int w, int observed_errors,
                        std::uint64_t draws, std::uint64_t seed, std::uint64_t exact_limit = 100'000);

/// Orientation of J(n, w) with an arc B -> (i j)B for every kernel error.
/// Throws VerificationError if some edge receives both or neither direction.
Orientation orientation_from_learner(const Learner& learner, const Dataset& data, int w);

/// Uniform labeling of S(n, w) from a seed.
Word random_labeling(int n, int w, std::uint64_t seed);

} // namespace lpocode
