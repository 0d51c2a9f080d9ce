#include <algorithm>
#include <bit>
#include <charconv>
#include <cstring>
#include <numeric>
#include <optional>
#include <sstream>

#include <Eigen/Dense>

#include "lpocode/errors.hpp"
#include "lpocode/learner.hpp"
#include "lpocode/numeric.hpp"

namespace lpocode {

namespace {

std::uint64_t all_rows(std::size_t n)
{
    return full_mask(static_cast<int>(n));
}

std::uint64_t pair_removed(std::size_t n, std::size_t low, std::size_t high)
{
    return all_rows(n) & ~((std::uint64_t{1} << low) | (std::uint64_t{1} << high));
}

void check_rows(const Dataset& data)
{
    if (data.rows() > static_cast<std::size_t>(kMaxWordLength))
        throw ParameterError("learners support at most 64 rows");
}

// ---- constant ------------------------------------------------------------

class ScorePredictor final : public PairPredictor {
public:
    explicit ScorePredictor(std::vector<double> scores) : scores_(std::move(scores)) {}

    bool prefers_low(const TrainingView&, std::size_t low, std::size_t high) override
    {
        return scores_[low] > scores_[high];
    }

private:
    std::vector<double> scores_;
};

class ConstantLearner final : public Learner {
public:
    explicit ConstantLearner(std::vector<double> scores) : scores_(std::move(scores)) {}
    explicit ConstantLearner(std::size_t feature) : feature_(feature) {}

    std::string name() const override
    {
        return scores_ ? "constant(scores)" : "constant(feature=" + std::to_string(feature_) + ")";
    }

    std::unique_ptr<PairPredictor> bind(const Dataset& data) const override
    {
        check_rows(data);
        if (scores_) {
            if (scores_->size() != data.rows())
                throw ParameterError("constant learner has " + std::to_string(scores_->size()) +
                                     " scores for " + std::to_string(data.rows()) + " rows");
            return std::make_unique<ScorePredictor>(*scores_);
        }
        if (feature_ >= data.cols())
            throw ParameterError("feature index out of range");
        std::vector<double> scores(data.rows());
        for (std::size_t r = 0; r < data.rows(); ++r)
            scores[r] = data.at(r, feature_);
        return std::make_unique<ScorePredictor>(std::move(scores));
    }

private:
    std::optional<std::vector<double>> scores_;
    std::size_t feature_ = 0;
};

// ---- order direction -----------------------------------------------------

class OrderDirectionPredictor final : public PairPredictor {
public:
    OrderDirectionPredictor(const Dataset& data, std::size_t feature) : n_(data.rows())
    {
        values_.resize(n_);
        for (std::size_t r = 0; r < n_; ++r)
            values_[r] = data.at(r, feature);
        sign_.resize(n_ * n_);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                sign_[a * n_ + b] = static_cast<signed char>((values_[a] > values_[b]) - (values_[a] < values_[b]));
    }

    bool prefers_low(const TrainingView& view, std::size_t low, std::size_t high) override
    {
        const std::uint64_t ones = view.labels & view.members;
        const std::uint64_t zeros = view.members & ~view.labels;
        long balance = 0;  // concordant minus discordant (one, zero) pairs
        for (std::uint64_t a = ones; a; a &= a - 1) {
            const auto i = static_cast<std::size_t>(std::countr_zero(a));
            for (std::uint64_t b = zeros; b; b &= b - 1)
                balance += sign_[i * n_ + static_cast<std::size_t>(std::countr_zero(b))];
        }
        return balance >= 0 ? values_[low] > values_[high] : values_[low] < values_[high];
    }

private:
    std::size_t n_;
    std::vector<double> values_;
    std::vector<signed char> sign_;
};

class OrderDirectionLearner final : public Learner {
public:
    explicit OrderDirectionLearner(std::size_t feature) : feature_(feature) {}

    std::string name() const override { return "order-direction(feature=" + std::to_string(feature_) + ")"; }

    std::unique_ptr<PairPredictor> bind(const Dataset& data) const override
    {
        check_rows(data);
        if (feature_ >= data.cols())
            throw ParameterError("feature index out of range");
        return std::make_unique<OrderDirectionPredictor>(data, feature_);
    }

private:
    std::size_t feature_;
};

// ---- parity --------------------------------------------------------------

class ParityPredictor final : public PairPredictor {
public:
    ParityPredictor(std::vector<bool> leak, bool even) : leak_(std::move(leak)), even_(even) {}

    bool prefers_low(const TrainingView&, std::size_t low, std::size_t high) override
    {
        const bool correct = leak_[low] && !leak_[high];
        return even_ ? correct : !correct;
    }

private:
    std::vector<bool> leak_;
    bool even_;
};

class ParityLearner final : public Learner {
public:
    std::string name() const override { return "parity"; }

    std::unique_ptr<PairPredictor> bind(const Dataset& data) const override
    {
        check_rows(data);
        if (data.cols() < 2)
            throw InputError("parity learner needs a label column and a coin column");
        std::vector<bool> leak(data.rows());
        bool even = true;
        for (std::size_t r = 0; r < data.rows(); ++r) {
            const double label = data.at(r, 0);
            const double coin = data.at(r, 1);
            if ((label != 0.0 && label != 1.0) || (coin != 0.0 && coin != 1.0))
                throw InputError("parity learner needs 0/1 values in its first two columns");
            leak[r] = label == 1.0;
            even ^= coin == 1.0;
        }
        return std::make_unique<ParityPredictor>(std::move(leak), even);
    }
};

// ---- random orientation --------------------------------------------------

class RandomPredictor final : public PairPredictor {
public:
    RandomPredictor(const Dataset& data, std::uint64_t seed) : seed_(seed)
    {
        for (std::size_t r = 0; r < data.rows(); ++r) {
            std::uint64_t h = 0x5bd1e9955bd1e995ULL;
            for (double v : data.row(r)) {
                if (v == 0.0)
                    v = 0.0;  // fold -0.0 into +0.0
                h = mix64(h ^ std::bit_cast<std::uint64_t>(v));
            }
            row_hash_.push_back(h);
        }
    }

    bool prefers_low(const TrainingView& view, std::size_t low, std::size_t high) override
    {
        // A sum of per-element hashes does not depend on row order.
        std::uint64_t training = 0;
        for (std::uint64_t m = view.members; m; m &= m - 1) {
            const auto k = static_cast<std::size_t>(std::countr_zero(m));
            const bool label = (view.labels >> k) & 1U;
            training += mix64(row_hash_[k] ^ (label ? 0xa0761d6478bd642fULL : 0xe7037ed1a0b428dbULL));
        }
        const std::uint64_t pair = mix64(row_hash_[low] ^ mix64(row_hash_[high] ^ seed_));
        return mix64(training ^ pair ^ mix64(seed_)) & 1U;
    }

private:
    std::uint64_t seed_;
    std::vector<std::uint64_t> row_hash_;
};

class RandomOrientationLearner final : public Learner {
public:
    explicit RandomOrientationLearner(std::uint64_t seed) : seed_(seed) {}

    std::string name() const override { return "random(seed=" + std::to_string(seed_) + ")"; }

    std::unique_ptr<PairPredictor> bind(const Dataset& data) const override
    {
        check_rows(data);
        return std::make_unique<RandomPredictor>(data, seed_);
    }

private:
    std::uint64_t seed_;
};

// ---- ridge ---------------------------------------------------------------

class RidgePredictor final : public PairPredictor {
public:
    RidgePredictor(const Dataset& data, double lambda)
        : n_(data.rows()), design_(data.rows(), data.cols() + 1), penalty_(data.cols() + 1),
          cache_(n_ * n_)
    {
        for (std::size_t r = 0; r < n_; ++r) {
            design_(static_cast<Eigen::Index>(r), 0) = 1.0;
            for (std::size_t c = 0; c < data.cols(); ++c)
                design_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c + 1)) = data.at(r, c);
        }
        penalty_.setConstant(lambda);
        penalty_(0) = 0.0;
    }

    bool prefers_low(const TrainingView& view, std::size_t low, std::size_t high) override
    {
        if (view.members == 0)
            return false;
        if (view.members != pair_removed(n_, low, high))
            return direct(view, low, high) > 0.0;
        // Score difference of the held-out pair is linear in the training
        // labels, with coefficients that depend on the features only.
        auto& coefficients = cache_[low * n_ + high];
        if (coefficients.empty())
            coefficients = pair_coefficients(view.members, low, high);
        double difference = 0.0;
        for (std::uint64_t m = view.labels & view.members; m; m &= m - 1)
            difference += coefficients[static_cast<std::size_t>(std::countr_zero(m))];
        return difference > 0.0;
    }

private:
    Eigen::MatrixXd gram(std::uint64_t members) const
    {
        Eigen::MatrixXd a = penalty_.asDiagonal();
        for (std::uint64_t m = members; m; m &= m - 1) {
            const auto row = design_.row(std::countr_zero(m));
            a.noalias() += row.transpose() * row;
        }
        return a;
    }

    std::vector<double> pair_coefficients(std::uint64_t members, std::size_t low, std::size_t high) const
    {
        const Eigen::VectorXd gap =
            (design_.row(static_cast<Eigen::Index>(low)) - design_.row(static_cast<Eigen::Index>(high))).transpose();
        const Eigen::VectorXd v = gram(members).ldlt().solve(gap);
        const Eigen::VectorXd c = design_ * v;
        return {c.data(), c.data() + c.size()};
    }

    double direct(const TrainingView& view, std::size_t low, std::size_t high) const
    {
        Eigen::VectorXd target = Eigen::VectorXd::Zero(design_.cols());
        for (std::uint64_t m = view.labels & view.members; m; m &= m - 1)
            target += design_.row(std::countr_zero(m)).transpose();
        const Eigen::VectorXd beta = gram(view.members).ldlt().solve(target);
        return (design_.row(static_cast<Eigen::Index>(low)) - design_.row(static_cast<Eigen::Index>(high))).dot(beta);
    }

    std::size_t n_;
    Eigen::MatrixXd design_;
    Eigen::VectorXd penalty_;
    std::vector<std::vector<double>> cache_;
};

class RidgeLearner final : public Learner {
public:
    explicit RidgeLearner(double lambda) : lambda_(lambda)
    {
        if (!(lambda > 0.0))
            throw ParameterError("ridge lambda must be positive");
    }

    std::string name() const override
    {
        std::ostringstream out;
        out << "ridge(lambda=" << lambda_ << ")";
        return out.str();
    }

    std::unique_ptr<PairPredictor> bind(const Dataset& data) const override
    {
        check_rows(data);
        return std::make_unique<RidgePredictor>(data, lambda_);
    }

private:
    double lambda_;
};

// ---- k nearest neighbours ------------------------------------------------

class KnnPredictor final : public PairPredictor {
public:
    KnnPredictor(const Dataset& data, int k) : k_(k), order_(data.rows())
    {
        const std::size_t n = data.rows();
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<std::pair<double, std::size_t>> by_distance;
            for (std::size_t s = 0; s < n; ++s) {
                if (s == r)
                    continue;
                double d2 = 0.0;
                for (std::size_t c = 0; c < data.cols(); ++c) {
                    const double diff = data.at(r, c) - data.at(s, c);
                    d2 += diff * diff;
                }
                by_distance.emplace_back(d2, s);
            }
            std::sort(by_distance.begin(), by_distance.end());
            for (const auto& [d2, s] : by_distance)
                order_[r].push_back(static_cast<std::uint8_t>(s));
        }
    }

    bool prefers_low(const TrainingView& view, std::size_t low, std::size_t high) override
    {
        // Both rows see the same number of neighbours, so label sums compare like means.
        return ones_among_nearest(view, low) > ones_among_nearest(view, high);
    }

private:
    int ones_among_nearest(const TrainingView& view, std::size_t row) const
    {
        int taken = 0;
        int ones = 0;
        for (std::uint8_t s : order_[row]) {
            if (taken == k_)
                break;
            if (!((view.members >> s) & 1U))
                continue;
            ++taken;
            ones += static_cast<int>((view.labels >> s) & 1U);
        }
        return ones;
    }

    int k_;
    std::vector<std::vector<std::uint8_t>> order_;
};

class KnnLearner final : public Learner {
public:
    explicit KnnLearner(int k) : k_(k)
    {
        if (k < 1)
            throw ParameterError("knn needs k >= 1");
    }

    std::string name() const override { return "knn(k=" + std::to_string(k_) + ")"; }

    std::unique_ptr<PairPredictor> bind(const Dataset& data) const override
    {
        check_rows(data);
        return std::make_unique<KnnPredictor>(data, k_);
    }

private:
    int k_;
};

// ---- parameter parsing ---------------------------------------------------

std::string trim(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string_view::npos)
        return {};
    const auto last = text.find_last_not_of(" \t");
    return std::string(text.substr(first, last - first + 1));
}

template <typename T>
T parse_number(const std::string& key, const std::string& text)
{
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end)
        throw ParameterError("parameter " + key + " has invalid value '" + text + "'");
    return value;
}

class ParamReader {
public:
    explicit ParamReader(std::string_view text) : values_(parse_params(text)) {}

    template <typename T>
    T get(const std::string& key, T fallback)
    {
        auto it = values_.find(key);
        if (it == values_.end())
            return fallback;
        T value = parse_number<T>(key, it->second);
        values_.erase(it);
        return value;
    }

    void finish(std::string_view kind) const
    {
        if (!values_.empty())
            throw ParameterError("unknown parameter '" + values_.begin()->first + "' for learner " +
                                 std::string(kind));
    }

private:
    std::map<std::string, std::string> values_;
};

} // namespace

std::unique_ptr<Learner> make_constant_learner(std::vector<double> scores)
{
    return std::make_unique<ConstantLearner>(std::move(scores));
}

std::unique_ptr<Learner> make_constant_feature_learner(std::size_t feature)
{
    return std::make_unique<ConstantLearner>(feature);
}

std::unique_ptr<Learner> make_order_direction_learner(std::size_t feature)
{
    return std::make_unique<OrderDirectionLearner>(feature);
}

std::unique_ptr<Learner> make_parity_learner()
{
    return std::make_unique<ParityLearner>();
}

std::unique_ptr<Learner> make_random_orientation_learner(std::uint64_t seed)
{
    return std::make_unique<RandomOrientationLearner>(seed);
}

std::unique_ptr<Learner> make_ridge_learner(double lambda)
{
    return std::make_unique<RidgeLearner>(lambda);
}

std::unique_ptr<Learner> make_knn_learner(int k)
{
    return std::make_unique<KnnLearner>(k);
}

std::map<std::string, std::string> parse_params(std::string_view text)
{
    std::map<std::string, std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = std::min(text.find(',', start), text.size());
        const std::string item = trim(text.substr(start, comma - start));
        start = comma + 1;
        if (item.empty())
            continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ParameterError("parameter '" + item + "' is not of the form key=value");
        const std::string key = trim(std::string_view(item).substr(0, eq));
        if (key.empty() || !out.emplace(key, trim(std::string_view(item).substr(eq + 1))).second)
            throw ParameterError("parameter '" + item + "' is empty or repeated");
    }
    return out;
}

std::unique_ptr<Learner> make_learner(std::string_view kind, std::string_view params)
{
    ParamReader reader(params);
    std::unique_ptr<Learner> learner;
    if (kind == "constant") {
        learner = make_constant_feature_learner(reader.get<std::size_t>("feature", 0));
    } else if (kind == "order-direction") {
        learner = make_order_direction_learner(reader.get<std::size_t>("feature", 0));
    } else if (kind == "parity") {
        learner = make_parity_learner();
    } else if (kind == "random") {
        learner = make_random_orientation_learner(reader.get<std::uint64_t>("seed", 0));
    } else if (kind == "ridge") {
        learner = make_ridge_learner(reader.get<double>("lambda", 1.0));
    } else if (kind == "knn") {
        learner = make_knn_learner(reader.get<int>("k", 3));
    } else {
        throw ParameterError("unknown learner '" + std::string(kind) + "'");
    }
    reader.finish(kind);
    return learner;
}

std::vector<std::string> builtin_learners()
{
    return {"constant", "order-direction", "parity", "random", "ridge", "knn"};
}

} // namespace lpocode
