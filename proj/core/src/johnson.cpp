#include "lpocode/johnson.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "lpocode/errors.hpp"
#include "lpocode/max_flow.hpp"
#include "lpocode/numeric.hpp"

namespace lpocode {

std::uint64_t JohnsonGraph::vertex_count() const
{
    return binomial(n, w);
}

InducedSubgraph::InducedSubgraph(JohnsonGraph parent, std::vector<Word> vertices)
    : parent_(parent), vertices_(std::move(vertices))
{
    if (parent_.n < 2 || parent_.n > kMaxWordLength || parent_.w <= 0 || parent_.w >= parent_.n)
        throw ParameterError("Johnson graph needs 0 < w < n <= 64");
    for (const Word& v : vertices_)
        if (v.length() != parent_.n || v.weight() != parent_.w)
            throw ParameterError("vertex " + v.to_string() + " is not in S(" +
                                 std::to_string(parent_.n) + ", " + std::to_string(parent_.w) + ")");
    if (vertices_.size() > std::numeric_limits<std::uint32_t>::max())
        throw ResourceError("induced subgraph too large");

    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());

    for (std::size_t a = 0; a < vertices_.size(); ++a) {
        for (const Word& u : neighbors(vertices_[a])) {
            auto it = std::lower_bound(vertices_.begin(), vertices_.end(), u);
            if (it == vertices_.end() || *it != u)
                continue;
            const auto b = static_cast<std::size_t>(it - vertices_.begin());
            if (b > a)
                edges_.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
        }
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
        return x.low != y.low ? x.low < y.low : x.high < y.high;
    });

    std::vector<std::size_t> degree(vertices_.size(), 0);
    for (const Edge& e : edges_) {
        ++degree[e.low];
        ++degree[e.high];
    }
    incidence_offsets_.assign(vertices_.size() + 1, 0);
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        incidence_offsets_[v + 1] = incidence_offsets_[v] + degree[v];
    incidence_.resize(incidence_offsets_.back());
    std::vector<std::size_t> fill(incidence_offsets_.begin(), incidence_offsets_.end() - 1);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        incidence_[fill[edges_[e].low]++] = static_cast<std::uint32_t>(e);
        incidence_[fill[edges_[e].high]++] = static_cast<std::uint32_t>(e);
    }
}

std::optional<std::size_t> InducedSubgraph::index_of(const Word& word) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), word);
    if (it == vertices_.end() || *it != word)
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::span<const std::uint32_t> InducedSubgraph::incident_edges(std::size_t v) const
{
    if (v >= vertices_.size())
        throw ParameterError("vertex index out of range");
    return std::span<const std::uint32_t>(incidence_).subspan(
        incidence_offsets_[v], incidence_offsets_[v + 1] - incidence_offsets_[v]);
}

std::size_t InducedSubgraph::max_degree() const
{
    std::size_t best = 0;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        best = std::max(best, degree(v));
    return best;
}

bool InducedSubgraph::is_full() const
{
    return vertices_.size() == parent_.vertex_count();
}

SubgraphPtr build_induced(JohnsonGraph graph, std::vector<Word> vertices)
{
    return std::make_shared<const InducedSubgraph>(graph, std::move(vertices));
}

SubgraphPtr full_graph(JohnsonGraph graph)
{
    if (graph.vertex_count() > kMaxMaterializedVertices)
        throw ResourceError("J(" + std::to_string(graph.n) + ", " + std::to_string(graph.w) +
                            ") has more than 10^6 vertices");
    return build_induced(graph, enumerate_words(graph.n, graph.w));
}

Orientation::Orientation(SubgraphPtr domain, std::vector<bool> forward)
    : domain_(std::move(domain)), forward_(std::move(forward))
{
    if (!domain_)
        throw ParameterError("orientation needs a domain");
    if (forward_.size() != domain_->edge_count())
        throw ParameterError("orientation must direct every edge exactly once");
}

std::size_t Orientation::tail(std::size_t edge) const
{
    const auto& e = domain_->edges()[edge];
    return forward(edge) ? e.low : e.high;
}

std::size_t Orientation::head(std::size_t edge) const
{
    const auto& e = domain_->edges()[edge];
    return forward(edge) ? e.high : e.low;
}

std::vector<int> Orientation::outdegrees() const
{
    std::vector<int> out(domain_->vertex_count(), 0);
    for (std::size_t e = 0; e < forward_.size(); ++e)
        ++out[tail(e)];
    return out;
}

int Orientation::max_outdegree() const
{
    const auto out = outdegrees();
    return out.empty() ? 0 : *std::max_element(out.begin(), out.end());
}

bool operator==(const Orientation& a, const Orientation& b)
{
    if (a.domain_ == b.domain_)
        return a.forward_ == b.forward_;
    const auto& da = *a.domain_;
    const auto& db = *b.domain_;
    return da.parent().n == db.parent().n && da.parent().w == db.parent().w &&
           std::equal(da.vertices().begin(), da.vertices().end(), db.vertices().begin(),
                      db.vertices().end()) &&
           a.forward_ == b.forward_;
}

Orientation orientation_from_arcs(SubgraphPtr domain, std::span<const std::pair<Word, Word>> arcs)
{
    const InducedSubgraph& g = *domain;
    std::vector<bool> forward(g.edge_count(), false);
    std::vector<bool> seen(g.edge_count(), false);
    for (const auto& [from, to] : arcs) {
        const auto a = g.index_of(from);
        const auto b = g.index_of(to);
        if (!a || !b)
            throw ParameterError("arc " + from.to_string() + " -> " + to.to_string() +
                                 " leaves the domain");
        std::optional<std::size_t> edge;
        for (std::uint32_t e : g.incident_edges(*a)) {
            const auto& ends = g.edges()[e];
            if ((ends.low == *a && ends.high == *b) || (ends.low == *b && ends.high == *a)) {
                edge = e;
                break;
            }
        }
        if (!edge)
            throw ParameterError("arc " + from.to_string() + " -> " + to.to_string() +
                                 " is not an edge of the domain");
        if (seen[*edge])
            throw ParameterError("edge " + from.to_string() + " -- " + to.to_string() +
                                 " directed twice");
        seen[*edge] = true;
        forward[*edge] = g.edges()[*edge].low == *a;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw ParameterError("orientation leaves some edges undirected");
    return Orientation(std::move(domain), std::move(forward));
}

std::vector<std::pair<Word, Word>> arcs_of(const Orientation& orientation)
{
    const auto vertices = orientation.domain().vertices();
    std::vector<std::pair<Word, Word>> out;
    out.reserve(orientation.domain().edge_count());
    for (std::size_t e = 0; e < orientation.domain().edge_count(); ++e)
        out.emplace_back(vertices[orientation.tail(e)], vertices[orientation.head(e)]);
    return out;
}

int outdegree(const Orientation& orientation, const Word& v)
{
    const auto index = orientation.domain().index_of(v);
    if (!index)
        throw ParameterError("vertex " + v.to_string() + " is not in the orientation's domain");
    int count = 0;
    for (std::uint32_t e : orientation.domain().incident_edges(*index))
        count += orientation.tail(e) == *index ? 1 : 0;
    return count;
}

Orientation eulerian_orientation(SubgraphPtr graph)
{
    const InducedSubgraph& g = *graph;
    const std::size_t real_edges = g.edge_count();

    struct Link {
        std::size_t a;
        std::size_t b;
    };
    std::vector<Link> links;
    links.reserve(real_edges + g.vertex_count() / 2);
    for (const auto& e : g.edges())
        links.push_back({e.low, e.high});

    // Pair odd-degree vertices in rank order with virtual edges.
    std::size_t pending = g.vertex_count();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) % 2 == 0)
            continue;
        if (pending == g.vertex_count()) {
            pending = v;
        } else {
            links.push_back({pending, v});
            pending = g.vertex_count();
        }
    }

    std::vector<std::vector<std::size_t>> incident(g.vertex_count());
    for (std::size_t l = 0; l < links.size(); ++l) {
        incident[links[l].a].push_back(l);
        incident[links[l].b].push_back(l);
    }

    std::vector<bool> used(links.size(), false);
    std::vector<bool> forward(real_edges, false);
    std::vector<std::size_t> cursor(g.vertex_count(), 0);
    auto next_unused = [&](std::size_t v) -> std::optional<std::size_t> {
        while (cursor[v] < incident[v].size()) {
            const std::size_t l = incident[v][cursor[v]];
            if (!used[l])
                return l;
            ++cursor[v];
        }
        return std::nullopt;
    };

    // Every degree is now even, so each walk closes at its start and
    // contributes equally to in- and outdegree of the vertices it passes.
    for (std::size_t start = 0; start < g.vertex_count(); ++start) {
        while (next_unused(start)) {
            std::size_t at = start;
            while (auto l = next_unused(at)) {
                used[*l] = true;
                const std::size_t to = links[*l].a == at ? links[*l].b : links[*l].a;
                if (*l < real_edges)
                    forward[*l] = (at == links[*l].a);
                at = to;
            }
        }
    }
    return Orientation(std::move(graph), std::move(forward));
}

Feasibility orientation_feasible(SubgraphPtr graph, int max_outdegree)
{
    if (max_outdegree < 0)
        throw ParameterError("outdegree bound must be nonnegative");
    const InducedSubgraph& g = *graph;
    const std::size_t edge_count = g.edge_count();
    const std::size_t vertex_count = g.vertex_count();
    const std::size_t source = 0;
    const std::size_t first_edge = 1;
    const std::size_t first_vertex = first_edge + edge_count;
    const std::size_t sink = first_vertex + vertex_count;

    MaxFlow network(sink + 1);
    std::vector<std::size_t> low_arc(edge_count);
    for (std::size_t e = 0; e < edge_count; ++e) {
        network.add_arc(source, first_edge + e, 1);
        low_arc[e] = network.add_arc(first_edge + e, first_vertex + g.edges()[e].low, 1);
        network.add_arc(first_edge + e, first_vertex + g.edges()[e].high, 1);
    }
    for (std::size_t v = 0; v < vertex_count; ++v)
        network.add_arc(first_vertex + v, sink, max_outdegree);

    const auto flow = network.solve(source, sink);
    if (flow != static_cast<std::int64_t>(edge_count))
        return {};

    // The endpoint that absorbs an edge's unit of flow is charged with the arc.
    std::vector<bool> forward(edge_count);
    for (std::size_t e = 0; e < edge_count; ++e)
        forward[e] = network.flow(low_arc[e]) == 1;
    return {true, Orientation(std::move(graph), std::move(forward))};
}

int min_max_outdegree(SubgraphPtr graph)
{
    const InducedSubgraph& g = *graph;
    if (g.edge_count() == 0)
        return 0;
    int lo = static_cast<int>((g.edge_count() + g.vertex_count() - 1) / g.vertex_count());
    int hi = static_cast<int>((g.max_degree() + 1) / 2);
    while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        if (orientation_feasible(graph, mid).feasible)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

Orientation random_orientation(JohnsonGraph graph, std::uint64_t seed)
{
    auto domain = full_graph(graph);
    std::mt19937_64 rng(seed);
    std::vector<bool> forward(domain->edge_count());
    for (std::size_t e = 0; e < forward.size(); ++e)
        forward[e] = (rng() >> 63) != 0;
    return Orientation(std::move(domain), std::move(forward));
}

std::uint64_t count_w_light(const Orientation& orientation, int max_outdegree)
{
    if (!orientation.domain().is_full())
        throw ParameterError("count_w_light needs an orientation of the whole Johnson graph");
    std::uint64_t count = 0;
    for (int d : orientation.outdegrees())
        count += d <= max_outdegree ? 1 : 0;
    return count;
}

} // namespace lpocode
