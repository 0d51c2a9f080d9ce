#include "lpocode/wilcoxon.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "lpocode/errors.hpp"

namespace lpocode {

namespace {

void check_sizes(int n, int w)
{
    if (w < 1 || w >= n || n > kMaxWilcoxonSize)
        throw ParameterError("Wilcoxon counts need 1 <= w < n <= " + std::to_string(kMaxWilcoxonSize));
}

// Cumulative counts Q(W, n, w) for W = 0..w(n - w), keyed by (n, min(w, n - w)).
class CumulativeTable {
public:
    const std::vector<BigInt>& get(int n, int w)
    {
        std::lock_guard lock(mutex_);
        return compute(n, w);
    }

private:
    const std::vector<BigInt>& compute(int n, int w)
    {
        w = std::min(w, n - w);
        const auto key = std::make_pair(n, w);
        if (auto it = tables_.find(key); it != tables_.end())
            return it->second;

        const int top = w * (n - w);
        std::vector<BigInt> q(static_cast<std::size_t>(top) + 1);
        if (w == 1) {
            for (int W = 0; W <= top; ++W)
                q[static_cast<std::size_t>(W)] = W + 1;
        } else {
            // Condition on the label of the highest-scored element: a one
            // there is concordant with every zero, a zero there is discordant
            // with every one.
            const auto& with_zero_last = compute(n - 1, w);
            const auto& with_one_last = compute(n - 1, w - 1);
            const int shift = n - w;
            auto at = [](const std::vector<BigInt>& table, int W) -> BigInt {
                if (W < 0)
                    return 0;
                return table[std::min<std::size_t>(static_cast<std::size_t>(W), table.size() - 1)];
            };
            for (int W = 0; W <= top; ++W)
                q[static_cast<std::size_t>(W)] = at(with_zero_last, W) + at(with_one_last, W - shift);
        }
        return tables_.emplace(key, std::move(q)).first->second;
    }

    std::mutex mutex_;
    std::map<std::pair<int, int>, std::vector<BigInt>> tables_;
};

CumulativeTable& table()
{
    static CumulativeTable instance;
    return instance;
}

} // namespace

BigInt NullDistribution::total() const
{
    BigInt sum = 0;
    for (const auto& c : counts)
        sum += c;
    return sum;
}

BigInt q_count(int max_errors, int n, int w)
{
    check_sizes(n, w);
    if (max_errors < 0)
        return 0;
    const auto& q = table().get(n, w);
    return q[std::min<std::size_t>(static_cast<std::size_t>(max_errors), q.size() - 1)];
}

NullDistribution wmw_distribution(int n, int w)
{
    check_sizes(n, w);
    const auto& q = table().get(n, w);
    NullDistribution d{n, w, {}};
    d.counts.reserve(q.size());
    for (std::size_t k = 0; k < q.size(); ++k)
        d.counts.push_back(k == 0 ? q[0] : q[k] - q[k - 1]);
    return d;
}

Rational wmw_pvalue(int errors, int n, int w)
{
    check_sizes(n, w);
    if (errors < 0)
        throw ParameterError("error count must be nonnegative");
    return Rational(q_count(errors, n, w), binomial_big(n, w));
}

std::optional<int> wmw_critical(const Rational& alpha, int n, int w)
{
    check_sizes(n, w);
    if (alpha <= 0 || alpha > 1)
        throw ParameterError("alpha must lie in (0, 1]");
    const auto& q = table().get(n, w);
    const Rational threshold = alpha * Rational(binomial_big(n, w));
    std::optional<int> critical;
    for (std::size_t W = 0; W < q.size() && Rational(q[W]) < threshold; ++W)
        critical = static_cast<int>(W);
    return critical;
}

CriticalGrid wmw_critical_grid(const Rational& alpha, int max_size)
{
    if (max_size < 1)
        throw ParameterError("grid size must be positive");
    return CriticalGrid::build(max_size, max_size, [&](int ones, int zeros) {
        return wmw_critical(alpha, ones + zeros, ones);
    });
}

} // namespace lpocode
