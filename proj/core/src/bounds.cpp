#include "lpocode/bounds.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "lpocode/codes.hpp"
#include "lpocode/cwords.hpp"
#include "lpocode/errors.hpp"
#include "wide_int.hpp"

namespace lpocode {

namespace {

void check_instance(int n, int w, int max_outdegree)
{
    if (n < 2 || n > kMaxWordLength || w < 1 || w >= n)
        throw ParameterError("bounds need 1 <= w < n <= 64");
    if (max_outdegree < 0)
        throw ParameterError("W must be nonnegative");
}

bool all_light(int n, int w, int max_outdegree)
{
    return 2 * max_outdegree >= w * (n - w);
}

// Enumerating S(n, w) to measure the actual tau class is cheap up to here.
constexpr std::uint64_t kClassSizeLimit = 200'000;

class UpperMemo {
public:
    explicit UpperMemo(int max_outdegree) : W_(max_outdegree) {}

    std::uint64_t get(int n, int w)
    {
        w = std::min(w, n - w);
        if (auto known = known_exact(n, w, W_))
            return *known;
        const auto key = std::make_pair(n, w);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        // Here w >= 3, so both smaller instances stay valid.
        const detail::uint128 via_ones = static_cast<detail::uint128>(get(n - 1, w - 1)) * n / w;
        const detail::uint128 via_zeros = static_cast<detail::uint128>(get(n - 1, w)) * n / (n - w);
        const detail::uint128 cap = binomial(n, w);
        const auto value = static_cast<std::uint64_t>(std::min({via_ones, via_zeros, cap}));
        memo_.emplace(key, value);
        return value;
    }

private:
    int W_;
    std::map<std::pair<int, int>, std::uint64_t> memo_;
};

} // namespace

std::optional<std::uint64_t> boundary_exact(int n, int w, int max_outdegree)
{
    if (n < 2 || w < 1 || w >= n || max_outdegree < 0)
        return std::nullopt;
    const int v = std::min(w, n - w);
    const auto W = static_cast<std::uint64_t>(max_outdegree);
    if (v == 1)
        return std::min<std::uint64_t>(2 * W + 1, static_cast<std::uint64_t>(n));
    if (v == 2)
        return std::min<std::uint64_t>((W + 1) * static_cast<std::uint64_t>(n) / 2, binomial(n, 2));
    return std::nullopt;
}

std::optional<std::uint64_t> known_exact(int n, int w, int max_outdegree)
{
    check_instance(n, w, max_outdegree);
    if (all_light(n, w, max_outdegree))
        return binomial(n, w);
    return boundary_exact(n, w, max_outdegree);
}

std::uint64_t johnson_upper(int n, int w, int max_outdegree)
{
    check_instance(n, w, max_outdegree);
    UpperMemo memo(max_outdegree);
    return memo.get(n, w);
}

std::optional<std::uint64_t> gs_lower(int n, int w, int max_outdegree)
{
    if (n < 2 || w < 1 || w >= n || max_outdegree < 0 || n < 4 * max_outdegree)
        return std::nullopt;
    const std::uint64_t classes = static_cast<std::uint64_t>(n - 2 * max_outdegree);
    const std::uint64_t total = binomial(n, w);
    return total / classes + (total % classes != 0);
}

std::uint64_t lower_bound(int n, int w, int max_outdegree)
{
    if (auto known = known_exact(n, w, max_outdegree))
        return *known;
    // A W'-light code is W-light for every W >= W', and the tau bound grows with W'.
    const int best_tau = std::min(max_outdegree, n / 4);
    return std::max<std::uint64_t>(1, gs_lower(n, w, best_tau).value_or(1));
}

std::vector<BoundRecord> assemble_table(Range n_range, Range w_range, Range outdegree_range,
                                        bool exact_when_small)
{
    if (n_range.first > n_range.last || w_range.first > w_range.last ||
        outdegree_range.first > outdegree_range.last)
        throw ParameterError("bound table ranges must be nonempty");
    if (n_range.first < 2 || n_range.last > kMaxWordLength || w_range.first < 1 || outdegree_range.first < 0)
        throw ParameterError("bound table ranges out of domain");

    std::vector<BoundRecord> rows;
    for (int n = n_range.first; n <= n_range.last; ++n) {
        for (int w = w_range.first; w <= std::min(w_range.last, n / 2); ++w) {
            for (int W = outdegree_range.first; W <= outdegree_range.last; ++W) {
                BoundRecord row{n, w, W, lower_bound(n, w, W), johnson_upper(n, w, W), known_exact(n, w, W)};
                const std::uint64_t total = binomial(n, w);
                if (!row.exact && n >= 4 * W && total <= kClassSizeLimit) {
                    const auto sizes = tau_class_sizes(n, w, W);
                    row.lower = std::max(row.lower, *std::max_element(sizes.begin(), sizes.end()));
                }
                if (!row.exact && exact_when_small && total <= kExactSearchLimit)
                    row.exact = exact_L(n, w, W).size;
                if (row.lower > row.upper || (row.exact && (*row.exact > row.upper || *row.exact < row.lower)))
                    throw VerificationError("inconsistent bounds for (" + std::to_string(n) + ", " +
                                            std::to_string(w) + ", " + std::to_string(W) + ")");
                rows.push_back(row);
            }
        }
    }
    return rows;
}

std::optional<int> lightcode_critical(const Rational& alpha, int n, int w, BoundKind kind)
{
    if (alpha <= 0 || alpha > 1)
        throw ParameterError("alpha must lie in (0, 1]");
    check_instance(n, w, 0);
    const Rational threshold = alpha * Rational(binomial(n, w));
    auto bound = [&](int W) -> std::uint64_t {
        switch (kind) {
        case BoundKind::lower:
            return lower_bound(n, w, W);
        case BoundKind::upper:
            return johnson_upper(n, w, W);
        case BoundKind::exact:
            if (auto known = known_exact(n, w, W))
                return *known;
            if (binomial(n, w) > kExactSearchLimit)
                throw ResourceError("exact L unknown for (" + std::to_string(n) + ", " + std::to_string(w) +
                                    ") beyond the search limit");
            return exact_L(n, w, W).size;
        }
        return 0;
    };
    std::optional<int> critical;
    for (int W = 0; W <= w * (n - w); ++W) {
        if (Rational(bound(W)) >= threshold)
            break;
        critical = W;
    }
    return critical;
}

} // namespace lpocode
