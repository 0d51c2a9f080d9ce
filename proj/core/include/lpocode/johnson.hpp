#pragma once

// Johnson graphs J(n, w), their induced subgraphs and edge orientations.
//
// An orientation of J(n, w) is the combinatorial shadow of a learning
// algorithm under leave-pair-out: the arc B -> (i j)B records that the
// learner errs on the held-out pair (i, j) when the labeling is B. The
// outdegree of a vertex is then the number of leave-pair-out errors made
// for that labeling.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lpocode/cwords.hpp"

namespace lpocode {

/// Full Johnson graphs are materialized only up to this many vertices.
inline constexpr std::uint64_t kMaxMaterializedVertices = 1'000'000;

struct JohnsonGraph {
    int n;
    int w;

    std::uint64_t vertex_count() const;
    int degree() const noexcept { return w * (n - w); }
    std::uint64_t edge_count() const { return vertex_count() * static_cast<std::uint64_t>(degree()) / 2; }
};

/// Subgraph of a Johnson graph induced by a vertex set. Vertices are held in
/// rank order; an edge stores local indices (low, high) with rank(low) < rank(high).
class InducedSubgraph {
public:
    struct Edge {
        std::uint32_t low;
        std::uint32_t high;
    };

    InducedSubgraph(JohnsonGraph parent, std::vector<Word> vertices);

    const JohnsonGraph& parent() const noexcept { return parent_; }
    std::span<const Word> vertices() const noexcept { return vertices_; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Local index of a word, if it is a vertex of this subgraph.
    std::optional<std::size_t> index_of(const Word& word) const;

    /// Ids of the edges touching local vertex v.
    std::span<const std::uint32_t> incident_edges(std::size_t v) const;

    std::size_t degree(std::size_t v) const { return incident_edges(v).size(); }
    std::size_t max_degree() const;

    /// True when the vertex set is all of S(n, w).
    bool is_full() const;

private:
    JohnsonGraph parent_;
    std::vector<Word> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> incidence_;
    std::vector<std::size_t> incidence_offsets_;
};

using SubgraphPtr = std::shared_ptr<const InducedSubgraph>;

/// Subgraph induced by `vertices` (duplicates are merged). Throws
/// ParameterError when a vertex is not in S(n, w).
SubgraphPtr build_induced(JohnsonGraph graph, std::vector<Word> vertices);

/// The whole of J(n, w). Throws ResourceError beyond kMaxMaterializedVertices.
SubgraphPtr full_graph(JohnsonGraph graph);

/// A direction for every edge of a subgraph.
class Orientation {
public:
    /// `forward[e]` is true when edge e points from its low to its high vertex.
    Orientation(SubgraphPtr domain, std::vector<bool> forward);

    const InducedSubgraph& domain() const noexcept { return *domain_; }
    const SubgraphPtr& domain_ptr() const noexcept { return domain_; }

    bool forward(std::size_t edge) const { return forward_.at(edge); }
    std::size_t tail(std::size_t edge) const;
    std::size_t head(std::size_t edge) const;

    /// Outdegree per local vertex.
    std::vector<int> outdegrees() const;
    int max_outdegree() const;

    friend bool operator==(const Orientation& a, const Orientation& b);

private:
    SubgraphPtr domain_;
    std::vector<bool> forward_;
};

/// Orientation of `domain` given as explicit (from, to) arcs. Every edge of
/// the domain must appear exactly once; throws ParameterError otherwise.
Orientation orientation_from_arcs(SubgraphPtr domain, std::span<const std::pair<Word, Word>> arcs);

/// The arcs of an orientation as (from, to) words, in edge order.
std::vector<std::pair<Word, Word>> arcs_of(const Orientation& orientation);

/// Number of arcs leaving `v`. Throws ParameterError when v is outside the domain.
int outdegree(const Orientation& orientation, const Word& v);

/// Orientation along closed trails after pairing odd-degree vertices with
/// virtual edges; every vertex ends with outdegree at most ceil(degree / 2).
Orientation eulerian_orientation(SubgraphPtr graph);

struct Feasibility {
    bool feasible = false;
    std::optional<Orientation> witness;
};

/// Decides whether some orientation keeps every outdegree at most `max_outdegree`,
/// via max-flow on source -> edge -> endpoint -> sink.
Feasibility orientation_feasible(SubgraphPtr graph, int max_outdegree);

/// Smallest W for which orientation_feasible(graph, W) holds.
int min_max_outdegree(SubgraphPtr graph);

/// Every edge of J(n, w) directed by an independent fair coin drawn from a stream seeded by `seed`.
Orientation random_orientation(JohnsonGraph graph, std::uint64_t seed);

/// Number of vertices with outdegree <= max_outdegree. The orientation must cover all of J(n, w).
std::uint64_t count_w_light(const Orientation& orientation, int max_outdegree);

} // namespace lpocode
