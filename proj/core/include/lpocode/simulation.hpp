#pragma once

// Monte-Carlo experiments: empirical critical tables and type-II error rates.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpocode/critical_grid.hpp"
#include "lpocode/numeric.hpp"

namespace lpocode {

/// One simulation setup: a learner (kind and params) and a data scenario.
struct SimulationConfig {
    std::string learner;
    std::string params;
    std::string scenario;
    std::uint64_t seed = 0;
};

/// Parses `learner;params;scenario;seed`. Throws InputError when malformed.
SimulationConfig parse_config_line(std::string_view line);

/// One config per non-empty line; lines starting with '#' are skipped.
std::vector<SimulationConfig> read_config_file(const std::string& path);

/// Empirical critical value of one cell: the largest W whose frequency of
/// {errors <= W} over `reps` fresh samples is below alpha. Sample r of the
/// cell is seeded by derive_seed(derive_seed(seed, ones, zeros), r).
std::optional<int> empirical_critical_cell(const SimulationConfig& config, const Rational& alpha, int ones,
                                           int zeros, int reps);

/// Per-config grids over 1..max_size on both axes, merged by cellwise
/// minimum. When `cells` is given only those (ones, zeros) cells are
/// simulated and the rest stay empty.
CriticalGrid empirical_critical_table(std::span<const SimulationConfig> configs, const Rational& alpha,
                                      int max_size, int reps,
                                      std::optional<std::vector<std::pair<int, int>>> cells = std::nullopt);

struct Type2Point {
    int size = 0;
    double failure_proportion = 0.0;
};

/// For each even size n, draws `reps` samples with w = n / 2 and reports the
/// fraction whose LPOCV error count exceeds the critical value of cell
/// (n / 2, n / 2). An empty cell fails every replication.
std::vector<Type2Point> type2_experiment(const SimulationConfig& setup, std::span<const int> sizes,
                                         const CriticalGrid& critical, int reps);

} // namespace lpocode
