#pragma once

// Learning algorithms as seen by leave-pair-out cross-validation.
//
// A learner is bound to a dataset once, then asked about held-out pairs. It
// only answers for the pair in canonical order (low < high positions); the
// opposite order is the complement, so pair antisymmetry holds by
// construction. Labels of the held-out pair are never passed in.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lpocode/dataset.hpp"

namespace lpocode {

/// Training set of one leave-pair-out round: the rows in `members`, with
/// label bits in `labels` (bits outside `members` are zero).
struct TrainingView {
    std::uint64_t members;
    std::uint64_t labels;
};

class PairPredictor {
public:
    virtual ~PairPredictor() = default;

    /// True when the learner trained on `view` predicts row `low` as the
    /// one-labeled member of the pair (low, high), low < high.
    virtual bool prefers_low(const TrainingView& view, std::size_t low, std::size_t high) = 0;
};

class Learner {
public:
    virtual ~Learner() = default;

    /// Name and parameters, e.g. "ridge(lambda=1)".
    virtual std::string name() const = 0;

    /// Predictor for one dataset; it may cache per-dataset work and must
    /// not outlive `data`.
    virtual std::unique_ptr<PairPredictor> bind(const Dataset& data) const = 0;
};

/// Predicts by strict comparison of fixed per-row scores; ties never favor
/// the lower row. Scores default to feature column `feature`.
std::unique_ptr<Learner> make_constant_learner(std::vector<double> scores);
std::unique_ptr<Learner> make_constant_feature_learner(std::size_t feature = 0);

/// Uses +feature when the training set has at least as many concordant as
/// discordant (one, zero) pairs on it, -feature otherwise.
std::unique_ptr<Learner> make_order_direction_learner(std::size_t feature = 0);

/// Needs column 0 = label leak and column 1 = 0/1 coin. Predicts correctly
/// from the leak when the coin column sums to an even number over all rows,
/// wrongly otherwise.
std::unique_ptr<Learner> make_parity_learner();

/// Bit from a hash of the training multiset (rows and labels), the held-out
/// pair and `seed`.
std::unique_ptr<Learner> make_random_orientation_learner(std::uint64_t seed);

/// Ridge regression on 0/1 targets with an unpenalized intercept.
std::unique_ptr<Learner> make_ridge_learner(double lambda = 1.0);

/// Mean label of the k nearest training rows (Euclidean; ties by row index).
std::unique_ptr<Learner> make_knn_learner(int k = 3);

/// "key=value" pairs separated by commas.
std::map<std::string, std::string> parse_params(std::string_view text);

/// Kinds: constant, order-direction, parity, random, ridge, knn. Throws
/// ParameterError for unknown kinds or parameters.
std::unique_ptr<Learner> make_learner(std::string_view kind, std::string_view params = {});

std::vector<std::string> builtin_learners();

} // namespace lpocode
