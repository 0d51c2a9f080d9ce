// Exhaustive search for L(W, n, w) on small Johnson graphs.
//
// Vertices are taken in rank order and either included or skipped. The
// included set always carries an orientation with outdegrees <= W, kept as
// per-vertex out-neighbour masks; adding a vertex orients its new edges one
// by one, reversing a directed path to a vertex with spare capacity when
// both endpoints are full. That path exists exactly when the enlarged set is
// still W-light, so the test is exact.

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "lpocode/codes.hpp"
#include "lpocode/errors.hpp"
#include "lpocode/numeric.hpp"

namespace lpocode {

namespace {

constexpr std::size_t kSlots = kExactSearchLimit;
using Mask = std::uint32_t;
static_assert(kSlots <= 32);

struct State {
    std::array<Mask, kSlots> out{};
};

class Search {
public:
    Search(std::vector<Mask> adjacency, int max_outdegree, std::size_t cap)
        : adj_(std::move(adjacency)), w_(max_outdegree), cap_(cap), count_(adj_.size())
    {
    }

    void run(std::size_t incumbent)
    {
        best_size_ = incumbent;
        if (count_ == 0 || best_size_ >= cap_)
            return;
        State state;
        if (!add(state, 0, 0))
            return;  // W < 0 is rejected earlier, so a single vertex always fits
        descend(state, Mask{1}, 1, 1);
    }

    std::size_t best_size() const noexcept { return best_size_; }
    Mask best_set() const noexcept { return best_set_; }
    bool improved() const noexcept { return best_set_ != 0; }
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    int outdeg(const State& s, std::size_t v) const { return std::popcount(s.out[v]); }

    // Reverses a directed path from `start` to some vertex with spare
    // capacity, freeing one unit at `start`.
    bool free_unit(State& s, std::size_t start, Mask members) const
    {
        std::array<int, kSlots> parent;
        parent.fill(-1);
        Mask seen = Mask{1} << start;
        std::array<std::size_t, kSlots> queue{};
        std::size_t head = 0, tail = 0;
        queue[tail++] = start;
        while (head < tail) {
            const std::size_t x = queue[head++];
            Mask next = s.out[x] & members & ~seen;
            while (next) {
                const auto y = static_cast<std::size_t>(std::countr_zero(next));
                next &= next - 1;
                seen |= Mask{1} << y;
                parent[y] = static_cast<int>(x);
                if (outdeg(s, y) < w_) {
                    for (std::size_t v = y; v != start;) {
                        const auto u = static_cast<std::size_t>(parent[v]);
                        s.out[u] &= ~(Mask{1} << v);
                        s.out[v] |= Mask{1} << u;
                        v = u;
                    }
                    return true;
                }
                queue[tail++] = y;
            }
        }
        return false;
    }

    // Adds vertex v to `members`, orienting its edges into the set.
    bool add(State& s, std::size_t v, Mask members) const
    {
        Mask edges = adj_[v] & members;
        const Mask with_v = members | (Mask{1} << v);
        while (edges) {
            const auto u = static_cast<std::size_t>(std::countr_zero(edges));
            edges &= edges - 1;
            if (outdeg(s, v) < w_) {
                s.out[v] |= Mask{1} << u;
            } else if (outdeg(s, u) < w_) {
                s.out[u] |= Mask{1} << v;
            } else if (free_unit(s, v, with_v)) {
                s.out[v] |= Mask{1} << u;
            } else if (free_unit(s, u, with_v)) {
                s.out[u] |= Mask{1} << v;
            } else {
                return false;
            }
        }
        return true;
    }

    void descend(const State& state, Mask members, std::size_t size, std::size_t next)
    {
        ++nodes_;
        if (size > best_size_) {
            best_size_ = size;
            best_set_ = members;
        }
        if (best_size_ >= cap_ || next >= count_)
            return;
        if (size + (count_ - next) <= best_size_)
            return;
        State grown = state;
        if (add(grown, next, members)) {
            descend(grown, members | (Mask{1} << next), size + 1, next + 1);
            if (best_size_ >= cap_)
                return;
        }
        descend(state, members, size, next + 1);
    }

    std::vector<Mask> adj_;
    int w_;
    std::size_t cap_;
    std::size_t count_;
    std::size_t best_size_ = 0;
    Mask best_set_ = 0;
    std::uint64_t nodes_ = 0;
};

std::optional<LightCode> known_code(int n, int w, int max_outdegree)
{
    std::optional<LightCode> best;
    auto offer = [&](LightCode code) {
        if (!best || code.size() > best->size())
            best = std::move(code);
    };
    if (w == 1)
        offer(construct_tournament(n, max_outdegree));
    if (w == n - 1)
        offer(complement_code(construct_tournament(n, max_outdegree)));
    if (n >= 3 && w == 2)
        offer(construct_orbit(n, max_outdegree));
    if (n >= 3 && w == n - 2)
        offer(complement_code(construct_orbit(n, max_outdegree)));
    if (n >= 4 * max_outdegree && n > 2 * max_outdegree)
        offer(construct_graham_sloane(n, w, max_outdegree));
    return best;
}

} // namespace

ExactResult exact_L(int n, int w, int max_outdegree)
{
    if (n < 2 || n > kMaxWordLength || w < 1 || w >= n)
        throw ParameterError("exact search needs 1 <= w < n <= 64");
    if (max_outdegree < 0)
        throw ParameterError("W must be nonnegative");
    const std::uint64_t total = binomial(n, w);
    if (total > kExactSearchLimit)
        throw ResourceError("exact search is limited to C(n, w) <= " + std::to_string(kExactSearchLimit));

    const JohnsonGraph graph{n, w};
    const auto words = enumerate_words(n, w);
    const int degree = graph.degree();

    ExactResult result;
    LightCode code{n, w, max_outdegree, {}, std::nullopt};
    if (2 * max_outdegree >= degree) {
        // Every vertex set is light: orient along closed trails.
        code.words = words;
    } else {
        std::vector<Mask> adjacency(words.size(), 0);
        for (std::size_t a = 0; a < words.size(); ++a)
            for (std::size_t b = 0; b < words.size(); ++b)
                if (hamming(words[a], words[b]) == 2)
                    adjacency[a] |= Mask{1} << b;

        // Some vertex of a light set has induced degree <= 2W, while its
        // induced degree is at least degree - (C - k).
        const std::size_t cap = std::min<std::size_t>(
            words.size(), static_cast<std::size_t>(2 * max_outdegree) + words.size() - degree);

        auto incumbent = known_code(n, w, max_outdegree);
        Search search(std::move(adjacency), max_outdegree, cap);
        search.run(incumbent ? incumbent->size() : 0);
        result.nodes = search.nodes();
        if (search.improved()) {
            for (std::size_t v = 0; v < words.size(); ++v)
                if ((search.best_set() >> v) & 1U)
                    code.words.push_back(words[v]);
        } else {
            code.words = incumbent->words;
        }
    }

    auto check = verify_light(code);
    if (!check.light)
        throw VerificationError("exact search returned a set that is not light");
    code.witness = std::move(check.witness);
    result.size = code.size();
    result.code = std::move(code);
    return result;
}

} // namespace lpocode
