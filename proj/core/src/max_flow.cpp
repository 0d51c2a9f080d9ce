#include "lpocode/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "lpocode/errors.hpp"

namespace lpocode {

namespace {
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
}

MaxFlow::MaxFlow(std::size_t node_count) : head_(node_count, kNone) {}

std::size_t MaxFlow::add_arc(std::size_t from, std::size_t to, std::int64_t capacity)
{
    if (from >= head_.size() || to >= head_.size())
        throw ParameterError("max-flow arc endpoint out of range");
    if (capacity < 0)
        throw ParameterError("max-flow arc capacity must be nonnegative");
    const std::size_t id = arcs_.size();
    arcs_.push_back({to, head_[from], capacity, capacity});
    head_[from] = id;
    arcs_.push_back({from, head_[to], 0, 0});
    head_[to] = id + 1;
    return id;
}

std::int64_t MaxFlow::flow(std::size_t arc) const
{
    return arcs_.at(arc).capacity - arcs_.at(arc).residual;
}

bool MaxFlow::build_levels(std::size_t source, std::size_t sink)
{
    level_.assign(head_.size(), -1);
    std::queue<std::size_t> frontier;
    level_[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        const std::size_t u = frontier.front();
        frontier.pop();
        for (std::size_t a = head_[u]; a != kNone; a = arcs_[a].next) {
            if (arcs_[a].residual > 0 && level_[arcs_[a].to] < 0) {
                level_[arcs_[a].to] = level_[u] + 1;
                frontier.push(arcs_[a].to);
            }
        }
    }
    return level_[sink] >= 0;
}

std::int64_t MaxFlow::push(std::size_t node, std::size_t sink, std::int64_t limit)
{
    if (node == sink)
        return limit;
    for (std::size_t& a = cursor_[node]; a != kNone; a = arcs_[a].next) {
        Arc& arc = arcs_[a];
        if (arc.residual <= 0 || level_[arc.to] != level_[node] + 1)
            continue;
        const std::int64_t pushed = push(arc.to, sink, std::min(limit, arc.residual));
        if (pushed > 0) {
            arc.residual -= pushed;
            arcs_[a ^ 1].residual += pushed;
            return pushed;
        }
    }
    return 0;
}

std::int64_t MaxFlow::solve(std::size_t source, std::size_t sink)
{
    if (source >= head_.size() || sink >= head_.size() || source == sink)
        throw ParameterError("invalid max-flow terminals");
    std::int64_t total = 0;
    while (build_levels(source, sink)) {
        cursor_ = head_;
        while (std::int64_t pushed = push(source, sink, std::numeric_limits<std::int64_t>::max()))
            total += pushed;
    }
    return total;
}

} // namespace lpocode
