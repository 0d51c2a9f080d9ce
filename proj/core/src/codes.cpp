#include "lpocode/codes.hpp"

#include <algorithm>
#include <string>

#include "lpocode/errors.hpp"
#include "lpocode/numeric.hpp"

namespace lpocode {

namespace {

void check_code_shape(const LightCode& code)
{
    if (code.max_outdegree < 0)
        throw ParameterError("lightness parameter W must be nonnegative");
    for (const Word& word : code.words) {
        if (word.length() != code.n || word.weight() != code.w)
            throw ParameterError("word " + word.to_string() + " is not in S(" + std::to_string(code.n) +
                                 ", " + std::to_string(code.w) + ")");
    }
    std::vector<Word> sorted = code.words;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParameterError("code contains a repeated word");
}

// Orients the induced subgraph along closed trails and checks the result
// really is W-light; used by constructions whose proof gives the bound.
LightCode finish(int n, int w, int max_outdegree, std::vector<Word> words)
{
    LightCode code{n, w, max_outdegree, {}, std::nullopt};
    auto domain = build_induced({n, w}, std::move(words));
    code.words.assign(domain->vertices().begin(), domain->vertices().end());
    Orientation orientation = eulerian_orientation(domain);
    if (orientation.max_outdegree() > max_outdegree) {
        auto check = orientation_feasible(domain, max_outdegree);
        if (!check.feasible)
            throw VerificationError("construction produced a code that is not " +
                                    std::to_string(max_outdegree) + "-light");
        orientation = std::move(*check.witness);
    }
    code.witness = std::move(orientation);
    return code;
}

} // namespace

LightnessCheck verify_light(const LightCode& code)
{
    check_code_shape(code);
    if (code.words.empty())
        return {true, std::nullopt};
    auto domain = build_induced(code.graph(), code.words);
    auto result = orientation_feasible(std::move(domain), code.max_outdegree);
    return {result.feasible, std::move(result.witness)};
}

bool audit_witness(const LightCode& code)
{
    if (!code.witness)
        return false;
    const InducedSubgraph& domain = code.witness->domain();
    if (domain.parent().n != code.n || domain.parent().w != code.w)
        return false;
    std::vector<Word> sorted = code.words;
    std::sort(sorted.begin(), sorted.end());
    if (!std::equal(sorted.begin(), sorted.end(), domain.vertices().begin(), domain.vertices().end()))
        return false;

    // Count adjacent pairs directly rather than trusting the domain's edge list.
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < sorted.size(); ++a)
        for (std::size_t b = a + 1; b < sorted.size(); ++b)
            pairs += hamming(sorted[a], sorted[b]) == 2;
    if (pairs != domain.edge_count())
        return false;
    for (const auto& edge : domain.edges())
        if (hamming(domain.vertices()[edge.low], domain.vertices()[edge.high]) != 2)
            return false;
    return code.witness->max_outdegree() <= code.max_outdegree;
}

LightCode construct_tournament(int n, int max_outdegree)
{
    if (n < 2 || n > kMaxWordLength)
        throw ParameterError("n must lie in [2, 64]");
    if (max_outdegree < 0)
        throw ParameterError("W must be nonnegative");
    const int size = std::min(2 * max_outdegree + 1, n);
    std::vector<Word> words;
    for (int i = 0; i < size; ++i)
        words.emplace_back(n, std::uint64_t{1} << i);
    return finish(n, 1, max_outdegree, std::move(words));
}

LightCode construct_orbit(int n, int max_outdegree)
{
    if (n < 3 || n > kMaxWordLength)
        throw ParameterError("n must lie in [3, 64]");
    if (max_outdegree < 0)
        throw ParameterError("W must be nonnegative");
    const int column = max_outdegree + 1;  // ones allowed per position
    const std::uint64_t all = binomial(n, 2);
    const std::uint64_t target =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(column) * n / 2, all);
    if (target == all)
        return finish(n, 2, max_outdegree, enumerate_words(n, 2));

    auto pair_word = [n](int a, int b) {
        return Word(n, (std::uint64_t{1} << a) | (std::uint64_t{1} << (b % n)));
    };
    std::vector<Word> words;
    auto full_orbit = [&](int d) {
        for (int k = 0; k < n; ++k)
            words.push_back(pair_word(k, k + d));
    };

    if (n % 2 == 0) {
        if (column % 2 == 1)
            for (int k = 0; k < n / 2; ++k)
                words.push_back(pair_word(k, k + n / 2));
        for (int d = 1; d <= column / 2; ++d)
            full_orbit(d);
    } else if (column % 2 == 0) {
        for (int d = 1; d <= column / 2; ++d)
            full_orbit(d);
    } else {
        // Odd n with an odd column budget: every full orbit uses each
        // position twice, so one column's worth comes from a partial orbit of
        // disjoint adjacent pairs, taken in shift order and skipping shifts
        // that reuse a position.
        for (int d = 2; d <= column / 2 + 1; ++d)
            full_orbit(d);
        std::uint64_t used = 0;
        for (int k = 0; k < n && words.size() < target; ++k) {
            const std::uint64_t mask = (std::uint64_t{1} << k) | (std::uint64_t{1} << ((k + 1) % n));
            if (used & mask)
                continue;
            used |= mask;
            words.push_back(pair_word(k, k + 1));
        }
    }
    if (words.size() != target)
        throw VerificationError("orbit construction produced " + std::to_string(words.size()) +
                                " words, expected " + std::to_string(target));
    return finish(n, 2, max_outdegree, std::move(words));
}

int tau(const Word& word, int max_outdegree)
{
    const int modulus = word.length() - 2 * max_outdegree;
    if (max_outdegree < 0 || modulus < 1)
        throw ParameterError("tau needs 0 <= 2W < n");
    int sum = 0;
    for (int p : word.ones())
        sum += p + 1;
    return sum % modulus;
}

std::vector<std::uint64_t> tau_class_sizes(int n, int w, int max_outdegree)
{
    const int modulus = n - 2 * max_outdegree;
    if (max_outdegree < 0 || modulus < 1)
        throw ParameterError("tau classes need 0 <= 2W < n");
    if (binomial(n, w) > kMaxMaterializedVertices)
        throw ResourceError("S(n, w) too large to enumerate");
    std::vector<std::uint64_t> sizes(static_cast<std::size_t>(modulus), 0);
    for (const Word& word : enumerate_words(n, w))
        ++sizes[static_cast<std::size_t>(tau(word, max_outdegree))];
    return sizes;
}

LightCode construct_graham_sloane(int n, int w, int max_outdegree)
{
    if (max_outdegree < 0)
        throw ParameterError("W must be nonnegative");
    if (n < 4 * max_outdegree)
        throw ParameterError("the tau construction requires n >= 4W");
    const auto sizes = tau_class_sizes(n, w, max_outdegree);
    const int best = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    std::vector<Word> words;
    for (const Word& word : enumerate_words(n, w))
        if (tau(word, max_outdegree) == best)
            words.push_back(word);
    return finish(n, w, max_outdegree, std::move(words));
}

LightCode complement_code(const LightCode& code)
{
    check_code_shape(code);
    LightCode out{code.n, code.n - code.w, code.max_outdegree, {}, std::nullopt};
    std::vector<Word> words;
    words.reserve(code.words.size());
    for (const Word& word : code.words)
        words.push_back(complement(word));
    auto domain = build_induced(out.graph(), std::move(words));
    out.words.assign(domain->vertices().begin(), domain->vertices().end());
    if (code.witness) {
        // Complementing preserves adjacency, so arcs carry over one to one.
        auto arcs = arcs_of(*code.witness);
        for (auto& [from, to] : arcs) {
            from = complement(from);
            to = complement(to);
        }
        out.witness = orientation_from_arcs(std::move(domain), arcs);
    }
    return out;
}

Orientation extend_to_full(const LightCode& code)
{
    if (!code.witness)
        throw ParameterError("code has no witness orientation to extend");
    auto full = full_graph(code.graph());
    const InducedSubgraph& inner = code.witness->domain();
    std::vector<bool> forward(full->edge_count(), true);
    for (std::size_t e = 0; e < full->edge_count(); ++e) {
        const Word& low = full->vertices()[full->edges()[e].low];
        const Word& high = full->vertices()[full->edges()[e].high];
        const auto a = inner.index_of(low);
        const auto b = inner.index_of(high);
        if (a && b) {
            for (std::uint32_t f : inner.incident_edges(*a)) {
                if (inner.edges()[f].low == *a && inner.edges()[f].high == *b) {
                    forward[e] = code.witness->forward(f);
                    break;
                }
            }
        } else if (a) {
            forward[e] = false;  // point into the code
        }
    }
    return Orientation(std::move(full), std::move(forward));
}

} // namespace lpocode
