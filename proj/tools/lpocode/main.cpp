// lpocode: light constant-weight codes and LPOCV null distributions.
//
// Exit codes: 0 success, 1 usage error, 2 input error, 3 resource limit,
// 4 internal verification failure.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpocode/bounds.hpp"
#include "lpocode/codes.hpp"
#include "lpocode/critical_grid.hpp"
#include "lpocode/dataset.hpp"
#include "lpocode/errors.hpp"
#include "lpocode/io.hpp"
#include "lpocode/learner.hpp"
#include "lpocode/lpocv.hpp"
#include "lpocode/simulation.hpp"
#include "lpocode/wilcoxon.hpp"

namespace {

using namespace lpocode;

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitVerification = 4;

constexpr int kMaxGridSize = 32;

Range parse_range(const std::string& text, const char* flag)
{
    auto parse_int = [&](const std::string& part) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (part.empty() || used != part.size())
            throw ParameterError(std::string(flag) + " expects A..B or a single integer, got '" + text + "'");
        return value;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = parse_int(text);
        return {v, v};
    }
    const Range range{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
    if (range.first > range.last)
        throw ParameterError(std::string(flag) + " range is empty");
    return range;
}

// Writes to the named file, or to stdout when the path is empty.
class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_)
                throw InputError("cannot write '" + path + "'");
        }
    }

    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    return in;
}

// ---- bounds ----------------------------------------------------------------

struct BoundsArgs {
    std::string n_range = "3..8";
    std::string w_range = "1..4";
    std::string outdegree_range = "0..2";
    bool exact_when_small = false;
    std::string out;
};

void run_bounds(const BoundsArgs& args)
{
    const auto rows = assemble_table(parse_range(args.n_range, "--n-range"), parse_range(args.w_range, "--w-range"),
                                     parse_range(args.outdegree_range, "--W-range"), args.exact_when_small);
    Output out(args.out);
    write_bounds_csv(out.stream(), rows);
}

// ---- critical ----------------------------------------------------------------

struct CriticalArgs {
    std::string test = "wmw";
    std::string alpha = "0.05";
    int max_size = 20;
    std::string configs;
    int reps = 1000;
    std::string out;
};

void run_critical(const CriticalArgs& args)
{
    const Rational alpha = parse_probability(args.alpha);
    if (alpha >= 1)
        throw ParameterError("--alpha must be below 1");
    if (args.max_size < 1 || args.max_size > kMaxGridSize)
        throw ParameterError("--max-size must lie in [1, " + std::to_string(kMaxGridSize) + "]");

    std::optional<CriticalGrid> grid;
    if (args.test == "wmw") {
        grid = wmw_critical_grid(alpha, args.max_size);
    } else if (args.test == "lightcode-lower" || args.test == "lightcode-upper") {
        const BoundKind kind = args.test == "lightcode-lower" ? BoundKind::lower : BoundKind::upper;
        grid = CriticalGrid::build(args.max_size, args.max_size, [&](int ones, int zeros) {
            return lightcode_critical(alpha, ones + zeros, ones, kind);
        });
    } else if (args.test == "empirical") {
        if (args.configs.empty())
            throw ParameterError("--test empirical requires --configs");
        const auto configs = read_config_file(args.configs);
        for (const auto& config : configs)
            make_learner(config.learner, config.params);  // reject bad setups before simulating
        grid = empirical_critical_table(configs, alpha, args.max_size, args.reps);
    } else {
        throw ParameterError("unknown --test '" + args.test + "'");
    }
    Output out(args.out);
    write_grid_csv(out.stream(), *grid);
}

// ---- construct -------------------------------------------------------------

struct ConstructArgs {
    std::string method;
    int n = 0;
    std::optional<int> w;
    int outdegree = 0;
    std::string out;
    std::string witness;
};

void write_code(const LightCode& code, const std::string& code_path, const std::string& witness_path)
{
    {
        Output out(code_path);
        write_words(out.stream(), code.words);
    }
    if (!witness_path.empty()) {
        Output out(witness_path);
        write_orientation(out.stream(), *code.witness);
    }
}

void run_construct(const ConstructArgs& args)
{
    auto require_weight = [&](int expected) {
        if (args.w && *args.w != expected)
            throw ParameterError("--method " + args.method + " builds weight-" + std::to_string(expected) + " codes");
    };
    LightCode code;
    if (args.method == "tournament") {
        require_weight(1);
        code = construct_tournament(args.n, args.outdegree);
    } else if (args.method == "orbit") {
        require_weight(2);
        code = construct_orbit(args.n, args.outdegree);
    } else if (args.method == "graham-sloane") {
        if (!args.w)
            throw ParameterError("--method graham-sloane needs --w");
        code = construct_graham_sloane(args.n, *args.w, args.outdegree);
    } else {
        throw ParameterError("unknown --method '" + args.method + "'");
    }
    if (!audit_witness(code) || !verify_light(code).light)
        throw VerificationError("constructed code failed verification");
    write_code(code, args.out, args.witness);
    if (!args.out.empty())
        std::cout << "size " << code.size() << '\n';
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string code;
    int outdegree = 0;
    std::string witness;
};

void run_verify(const VerifyArgs& args)
{
    auto in = open_input(args.code);
    const auto words = read_words(in);
    std::vector<Word> sorted = words;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("code file repeats a word");
    LightCode code{words.front().length(), words.front().weight(), args.outdegree, words, std::nullopt};
    const auto check = verify_light(code);
    std::cout << "size " << code.size() << '\n'
              << "W " << args.outdegree << '\n'
              << "light " << (check.light ? "yes" : "no") << '\n';
    if (check.light && !args.witness.empty()) {
        Output out(args.witness);
        write_orientation(out.stream(), *check.witness);
        std::cout << "witness " << args.witness << '\n';
    }
}

// ---- simulate --------------------------------------------------------------

struct SimulateArgs {
    std::string mode = "null";
    std::string null_kind = "labels";
    std::string learner = "constant";
    std::string params;
    std::string scenario = "null-gauss-1d";
    int n = 20;
    std::optional<int> w;
    int reps = 1000;
    int permutations = 1000;
    std::uint64_t seed = 1;
    std::vector<int> sizes{12, 16, 20, 24, 28, 32, 36, 40};
    std::string critical_table;
    std::string alpha = "0.05";
    std::string out;
};

void run_simulate(const SimulateArgs& args)
{
    const auto learner = make_learner(args.learner, args.params);
    if (args.reps < 1 || args.permutations < 1)
        throw ParameterError("--reps and --permutations must be positive");
    Output out(args.out);
    if (args.mode == "null") {
        const int w = args.w.value_or(args.n / 2);
        if (args.null_kind == "labels") {
            // One sample, every (or sampled) relabeling of it.
            const auto sample = generate_data(args.scenario, args.n, w, derive_seed(args.seed, 0));
            const bool exact = binomial(args.n, w) <= 100'000;
            const auto histogram = exact ? exact_null_distribution(*learner, sample.data, w)
                                         : sampled_null_distribution(*learner, sample.data, w,
                                                                     static_cast<std::uint64_t>(args.permutations),
                                                                     derive_seed(args.seed, 1));
            write_histogram_csv(out.stream(), histogram);
        } else if (args.null_kind == "sample") {
            // Fresh samples, each scored on its own labeling.
            ErrorHistogram histogram(static_cast<std::size_t>(w * (args.n - w)) + 1, 0);
            const std::uint64_t stream = derive_seed(args.seed, 2);
            for (int r = 0; r < args.reps; ++r) {
                const auto sample = generate_data(args.scenario, args.n, w, derive_seed(stream, r));
                ++histogram[static_cast<std::size_t>(lpocv_u(*learner, sample.data, sample.labels).errors)];
            }
            write_histogram_csv(out.stream(), histogram);
        } else {
            throw ParameterError("--null must be labels or sample");
        }
    } else if (args.mode == "type2") {
        if (args.sizes.empty())
            throw ParameterError("--sizes must not be empty");
        std::optional<CriticalGrid> grid;
        if (!args.critical_table.empty()) {
            auto in = open_input(args.critical_table);
            grid = read_grid_csv(in);
        } else {
            const int largest = *std::max_element(args.sizes.begin(), args.sizes.end());
            if (largest < 2 || largest / 2 > kMaxGridSize)
                throw ParameterError("--sizes out of range");
            grid = wmw_critical_grid(parse_probability(args.alpha), largest / 2);
        }
        const SimulationConfig setup{args.learner, args.params, args.scenario, args.seed};
        write_type2_csv(out.stream(), type2_experiment(setup, args.sizes, *grid, args.reps));
    } else {
        throw ParameterError("--mode must be null or type2");
    }
}

// ---- exact-L ---------------------------------------------------------------

struct ExactArgs {
    int n = 0;
    int w = 0;
    int outdegree = 0;
    std::string out;
    std::string witness;
};

void run_exact(const ExactArgs& args)
{
    const auto result = exact_L(args.n, args.w, args.outdegree);
    std::cout << result.size << '\n';
    if (!args.out.empty())
        write_code(result.code, args.out, args.witness);
    else if (!args.witness.empty())
        throw ParameterError("--witness needs --out");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Light constant-weight codes and leave-pair-out cross-validation null distributions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "lpocode 0.1.0");

    BoundsArgs bounds;
    auto* bounds_cmd = app.add_subcommand("bounds", "Table of lower/upper bounds on L(W, n, w)");
    bounds_cmd->add_option("--n-range", bounds.n_range, "n values, A..B")->capture_default_str();
    bounds_cmd->add_option("--w-range", bounds.w_range, "w values, A..B (rows kept for w <= n/2)")
        ->capture_default_str();
    bounds_cmd->add_option("--W-range", bounds.outdegree_range, "W values, A..B")->capture_default_str();
    bounds_cmd->add_flag("--exact-when-small", bounds.exact_when_small, "Search exact L when C(n, w) <= 24");
    bounds_cmd->add_option("--out", bounds.out, "Output CSV (default stdout)");

    CriticalArgs critical;
    auto* critical_cmd = app.add_subcommand("critical", "Grid of critical error counts");
    critical_cmd->add_option("--test", critical.test, "wmw | lightcode-lower | lightcode-upper | empirical")
        ->capture_default_str();
    critical_cmd->add_option("--alpha", critical.alpha, "Significance level, decimal or a/b")->capture_default_str();
    critical_cmd->add_option("--max-size", critical.max_size, "Largest class size on each axis")
        ->capture_default_str();
    critical_cmd->add_option("--configs", critical.configs, "Setups for empirical mode, learner;params;scenario;seed");
    critical_cmd->add_option("--reps", critical.reps, "Replications per cell in empirical mode")
        ->capture_default_str();
    critical_cmd->add_option("--out", critical.out, "Output CSV (default stdout)");

    ConstructArgs construct;
    auto* construct_cmd = app.add_subcommand("construct", "Build a W-light code and its witness orientation");
    construct_cmd->add_option("--method", construct.method, "tournament | orbit | graham-sloane")->required();
    construct_cmd->add_option("--n", construct.n, "Word length")->required();
    construct_cmd->add_option("--w", construct.w, "Word weight");
    construct_cmd->add_option("--W", construct.outdegree, "Outdegree bound")->required();
    construct_cmd->add_option("--out", construct.out, "Code file (default stdout)");
    construct_cmd->add_option("--witness", construct.witness, "Orientation file");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Decide whether a code is W-light");
    verify_cmd->add_option("--code", verify.code, "Word file")->required();
    verify_cmd->add_option("--W", verify.outdegree, "Outdegree bound")->required();
    verify_cmd->add_option("--witness", verify.witness, "Where to write a witness orientation");

    SimulateArgs simulate;
    auto* simulate_cmd = app.add_subcommand("simulate", "Null histograms and type-II experiments");
    simulate_cmd->add_option("--mode", simulate.mode, "null | type2")->capture_default_str();
    simulate_cmd->add_option("--null", simulate.null_kind,
                             "labels: relabel one sample; sample: fresh samples with their own labels")
        ->capture_default_str();
    simulate_cmd->add_option("--learner", simulate.learner, "constant | order-direction | parity | random | ridge | knn")
        ->capture_default_str();
    simulate_cmd->add_option("--params", simulate.params, "Learner parameters, e.g. lambda=1 or k=3");
    simulate_cmd->add_option("--scenario", simulate.scenario, "Data scenario or csv:<path>")->capture_default_str();
    simulate_cmd->add_option("--n", simulate.n, "Sample size")->capture_default_str();
    simulate_cmd->add_option("--w", simulate.w, "Number labeled one (default n/2)");
    simulate_cmd->add_option("--reps", simulate.reps, "Replications")->capture_default_str();
    simulate_cmd->add_option("--permutations", simulate.permutations, "Sampled labelings when not exact")
        ->capture_default_str();
    simulate_cmd->add_option("--seed", simulate.seed, "Master seed")->capture_default_str();
    simulate_cmd->add_option("--sizes", simulate.sizes, "Even sample sizes for type2 mode")->delimiter(',');
    simulate_cmd->add_option("--critical-table", simulate.critical_table,
                             "Critical grid CSV for type2 mode (default: Wilcoxon at --alpha)");
    simulate_cmd->add_option("--alpha", simulate.alpha, "Significance level for the default table")
        ->capture_default_str();
    simulate_cmd->add_option("--out", simulate.out, "Output CSV (default stdout)");

    ExactArgs exact;
    auto* exact_cmd = app.add_subcommand("exact-L", "Exact L(W, n, w) by exhaustive search");
    exact_cmd->add_option("--n", exact.n, "Word length")->required();
    exact_cmd->add_option("--w", exact.w, "Word weight")->required();
    exact_cmd->add_option("--W", exact.outdegree, "Outdegree bound")->required();
    exact_cmd->add_option("--out", exact.out, "Where to write an optimal code");
    exact_cmd->add_option("--witness", exact.witness, "Where to write its orientation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (bounds_cmd->parsed())
            run_bounds(bounds);
        else if (critical_cmd->parsed())
            run_critical(critical);
        else if (construct_cmd->parsed())
            run_construct(construct);
        else if (verify_cmd->parsed())
            run_verify(verify);
        else if (simulate_cmd->parsed())
            run_simulate(simulate);
        else if (exact_cmd->parsed())
            run_exact(exact);
    } catch (const ParameterError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitVerification;
    }
    return 0;
}
