#include "lpocode/lpocv.hpp"

#include <random>
#include <string>

#include "lpocode/errors.hpp"

namespace lpocode {

namespace {

void check_labeling(std::size_t rows, const Word& labeling)
{
    if (static_cast<std::size_t>(labeling.length()) != rows)
        throw ParameterError("labeling length " + std::to_string(labeling.length()) + " does not match " +
                             std::to_string(rows) + " rows");
}

// Kernel without argument checks; i is labeled one, j zero.
bool kernel(PairPredictor& predictor, std::size_t rows, std::uint64_t labels, int i, int j)
{
    const std::uint64_t members = full_mask(static_cast<int>(rows)) & ~((std::uint64_t{1} << i) | (std::uint64_t{1} << j));
    const TrainingView view{members, labels & members};
    const auto a = static_cast<std::size_t>(i);
    const auto b = static_cast<std::size_t>(j);
    const bool predicts_i = a < b ? predictor.prefers_low(view, a, b) : !predictor.prefers_low(view, b, a);
    return !predicts_i;
}

int count_errors(PairPredictor& predictor, std::size_t rows, const Word& labeling)
{
    int errors = 0;
    const auto ones = labeling.ones();
    const auto zeros = labeling.zeros();
    for (int i : ones)
        for (int j : zeros)
            errors += kernel(predictor, rows, labeling.bits(), i, j);
    return errors;
}

void check_null_inputs(const Dataset& data, int w)
{
    const auto n = static_cast<int>(data.rows());
    if (n < 2 || n > kMaxWordLength || w < 1 || w >= n)
        throw ParameterError("null distributions need 1 <= w < rows <= 64");
}

} // namespace

bool lpo_kernel(PairPredictor& predictor, std::size_t rows, const Word& labeling, int i, int j)
{
    check_labeling(rows, labeling);
    if (i < 0 || j < 0 || i >= labeling.length() || j >= labeling.length() || !labeling.test(i) || labeling.test(j))
        throw ParameterError("kernel needs row i labeled one and row j labeled zero");
    return kernel(predictor, rows, labeling.bits(), i, j);
}

bool lpo_kernel(const Learner& learner, const Dataset& data, const Word& labeling, int i, int j)
{
    auto predictor = learner.bind(data);
    return lpo_kernel(*predictor, data.rows(), labeling, i, j);
}

LpoScore lpocv_u(PairPredictor& predictor, std::size_t rows, const Word& labeling)
{
    check_labeling(rows, labeling);
    const int w = labeling.weight();
    return {count_errors(predictor, rows, labeling), w * (labeling.length() - w)};
}

LpoScore lpocv_u(const Learner& learner, const Dataset& data, const Word& labeling)
{
    auto predictor = learner.bind(data);
    return lpocv_u(*predictor, data.rows(), labeling);
}

ErrorHistogram exact_null_distribution(const Learner& learner, const Dataset& data, int w)
{
    check_null_inputs(data, w);
    const int n = static_cast<int>(data.rows());
    if (binomial(n, w) > kExactNullLimit)
        throw ResourceError("exact null distribution is limited to C(n, w) <= " + std::to_string(kExactNullLimit));
    auto predictor = learner.bind(data);
    ErrorHistogram histogram(static_cast<std::size_t>(w * (n - w)) + 1, 0);
    for (const Word& labeling : enumerate_words(n, w))
        ++histogram[static_cast<std::size_t>(count_errors(*predictor, data.rows(), labeling))];
    return histogram;
}

ErrorHistogram sampled_null_distribution(const Learner& learner, const Dataset& data, int w,
                                         std::uint64_t draws, std::uint64_t seed)
{
    check_null_inputs(data, w);
    const int n = static_cast<int>(data.rows());
    auto predictor = learner.bind(data);
    ErrorHistogram histogram(static_cast<std::size_t>(w * (n - w)) + 1, 0);
    for (std::uint64_t r = 0; r < draws; ++r) {
        const Word labeling = random_labeling(n, w, derive_seed(seed, r));
        ++histogram[static_cast<std::size_t>(count_errors(*predictor, data.rows(), labeling))];
    }
    return histogram;
}

Rational mc_null_pvalue(const Learner& learner, const Dataset& data, int w, int observed_errors,
                        std::uint64_t draws, std::uint64_t seed, std::uint64_t exact_limit)
{
    check_null_inputs(data, w);
    if (draws < 1)
        throw ParameterError("need at least one permutation");
    const int n = static_cast<int>(data.rows());
    const bool exact = binomial(n, w) <= std::min(exact_limit, kExactNullLimit);
    const ErrorHistogram histogram =
        exact ? exact_null_distribution(learner, data, w) : sampled_null_distribution(learner, data, w, draws, seed);
    std::uint64_t hits = 0;
    std::uint64_t total = 0;
    for (std::size_t k = 0; k < histogram.size(); ++k) {
        total += histogram[k];
        if (static_cast<long>(k) <= observed_errors)
            hits += histogram[k];
    }
    return exact ? Rational(hits, total) : Rational(1 + hits, 1 + total);
}

Orientation orientation_from_learner(const Learner& learner, const Dataset& data, int w)
{
    check_null_inputs(data, w);
    const int n = static_cast<int>(data.rows());
    auto domain = full_graph({n, w});
    auto predictor = learner.bind(data);
    std::vector<std::pair<Word, Word>> arcs;
    for (const Word& labeling : domain->vertices())
        for (int i : labeling.ones())
            for (int j : labeling.zeros())
                if (kernel(*predictor, data.rows(), labeling.bits(), i, j))
                    arcs.emplace_back(labeling, transpose(labeling, i, j));
    try {
        return orientation_from_arcs(std::move(domain), arcs);
    } catch (const ParameterError& e) {
        throw VerificationError(std::string("learner does not induce an orientation: ") + e.what());
    }
}

Word random_labeling(int n, int w, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    return random_word(n, w, rng);
}

} // namespace lpocode
