#pragma once

#include <cstdint>
#include <vector>

namespace lpocode {

/// Dinic's algorithm on an integer-capacity network. Deterministic: arcs are
/// explored in insertion order.
class MaxFlow {
public:
    explicit MaxFlow(std::size_t node_count);

    /// Adds an arc and returns its id, usable with flow().
    std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t capacity);

    std::int64_t solve(std::size_t source, std::size_t sink);

    /// Flow carried by an arc after solve().
    std::int64_t flow(std::size_t arc) const;

    std::size_t node_count() const noexcept { return head_.size(); }

private:
    struct Arc {
        std::size_t to;
        std::size_t next;
        std::int64_t residual;
        std::int64_t capacity;
    };

    bool build_levels(std::size_t source, std::size_t sink);
    std::int64_t push(std::size_t node, std::size_t sink, std::int64_t limit);

    std::vector<Arc> arcs_;
    std::vector<std::size_t> head_;
    std::vector<std::size_t> cursor_;
    std::vector<int> level_;
};

} // namespace lpocode
