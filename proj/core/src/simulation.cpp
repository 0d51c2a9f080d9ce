#include "lpocode/simulation.hpp"

#include <charconv>
#include <fstream>

#include "lpocode/dataset.hpp"
#include "lpocode/errors.hpp"
#include "lpocode/learner.hpp"
#include "lpocode/lpocv.hpp"

namespace lpocode {

namespace {

std::string trim(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = text.find_last_not_of(" \t\r");
    return std::string(text.substr(first, last - first + 1));
}

int errors_on_fresh_sample(const Learner& learner, const std::string& scenario, int n, int w, std::uint64_t seed)
{
    const LabeledDataset sample = generate_data(scenario, n, w, seed);
    return lpocv_u(learner, sample.data, sample.labels).errors;
}

} // namespace

SimulationConfig parse_config_line(std::string_view line)
{
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto semicolon = line.find(';', start);
        fields.push_back(trim(line.substr(start, semicolon == std::string_view::npos ? line.npos : semicolon - start)));
        if (semicolon == std::string_view::npos)
            break;
        start = semicolon + 1;
    }
    if (fields.size() != 4)
        throw InputError("config line '" + std::string(line) + "' must have 4 fields learner;params;scenario;seed");
    SimulationConfig config{fields[0], fields[1], fields[2], 0};
    const auto& seed = fields[3];
    const auto [ptr, ec] = std::from_chars(seed.data(), seed.data() + seed.size(), config.seed);
    if (seed.empty() || ec != std::errc() || ptr != seed.data() + seed.size())
        throw InputError("config line '" + std::string(line) + "' has an invalid seed");
    if (config.learner.empty() || config.scenario.empty())
        throw InputError("config line '" + std::string(line) + "' needs a learner and a scenario");
    return config;
}

std::vector<SimulationConfig> read_config_file(const std::string& path)
{
    std::ifstream file(path);
    if (!file)
        throw InputError("cannot open config file '" + path + "'");
    std::vector<SimulationConfig> configs;
    std::string line;
    while (std::getline(file, line)) {
        const std::string text = trim(line);
        if (text.empty() || text.front() == '#')
            continue;
        configs.push_back(parse_config_line(text));
    }
    if (configs.empty())
        throw InputError("config file '" + path + "' lists no setups");
    return configs;
}

std::optional<int> empirical_critical_cell(const SimulationConfig& config, const Rational& alpha, int ones,
                                           int zeros, int reps)
{
    if (reps < 1)
        throw ParameterError("need at least one replication");
    if (ones < 1 || zeros < 1)
        throw ParameterError("cells need at least one element of each label");
    const auto learner = make_learner(config.learner, config.params);
    const int n = ones + zeros;
    const std::uint64_t cell_seed = derive_seed(config.seed, static_cast<std::uint64_t>(ones),
                                                static_cast<std::uint64_t>(zeros));
    std::vector<std::uint64_t> histogram(static_cast<std::size_t>(ones * zeros) + 1, 0);
    for (int r = 0; r < reps; ++r)
        ++histogram[static_cast<std::size_t>(
            errors_on_fresh_sample(*learner, config.scenario, n, ones, derive_seed(cell_seed, r)))];

    const Rational threshold = alpha * reps;
    std::optional<int> critical;
    std::uint64_t cumulative = 0;
    for (std::size_t W = 0; W < histogram.size(); ++W) {
        cumulative += histogram[W];
        if (Rational(cumulative) >= threshold)
            break;
        critical = static_cast<int>(W);
    }
    return critical;
}

CriticalGrid empirical_critical_table(std::span<const SimulationConfig> configs, const Rational& alpha,
                                      int max_size, int reps, std::optional<std::vector<std::pair<int, int>>> cells)
{
    if (configs.empty())
        throw ParameterError("empirical tables need at least one config");
    if (max_size < 1)
        throw ParameterError("grid size must be positive");
    if (!cells) {
        cells.emplace();
        for (int ones = 1; ones <= max_size; ++ones)
            for (int zeros = 1; zeros <= max_size; ++zeros)
                cells->emplace_back(ones, zeros);
    }
    CriticalGrid merged(max_size, max_size);
    for (const auto& [ones, zeros] : *cells) {
        if (!merged.contains(ones, zeros))
            throw ParameterError("requested cell lies outside the grid");
        // An empty cell in any config empties the merged cell.
        std::optional<int> cell = empirical_critical_cell(configs[0], alpha, ones, zeros, reps);
        for (std::size_t c = 1; c < configs.size() && cell; ++c) {
            const auto value = empirical_critical_cell(configs[c], alpha, ones, zeros, reps);
            cell = value ? std::optional<int>(std::min(*value, *cell)) : std::nullopt;
        }
        merged.set(ones, zeros, cell);
    }
    return merged;
}

std::vector<Type2Point> type2_experiment(const SimulationConfig& setup, std::span<const int> sizes,
                                         const CriticalGrid& critical, int reps)
{
    if (reps < 1)
        throw ParameterError("need at least one replication");
    const auto learner = make_learner(setup.learner, setup.params);
    std::vector<Type2Point> points;
    for (std::size_t s = 0; s < sizes.size(); ++s) {
        const int n = sizes[s];
        if (n < 2 || n % 2 != 0)
            throw ParameterError("type-II sizes must be even and at least 2");
        const int w = n / 2;
        if (!critical.contains(w, n - w))
            throw ParameterError("critical table has no cell for size " + std::to_string(n));
        const auto threshold = critical.at(w, n - w);
        const std::uint64_t size_seed = derive_seed(setup.seed, static_cast<std::uint64_t>(n));
        int failures = 0;
        for (int r = 0; r < reps; ++r) {
            const int errors = errors_on_fresh_sample(*learner, setup.scenario, n, w, derive_seed(size_seed, r));
            failures += !threshold || errors > *threshold;
        }
        points.push_back({n, static_cast<double>(failures) / reps});
    }
    return points;
}

} // namespace lpocode
