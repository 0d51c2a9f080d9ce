#include <benchmark/benchmark.h>

#include "lpocode/codes.hpp"
#include "lpocode/johnson.hpp"
#include "lpocode/lpocv.hpp"
#include "lpocode/wilcoxon.hpp"

using namespace lpocode;

static void BM_ExactL(benchmark::State& state)
{
    const int W = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_L(6, 3, W).size);
}
BENCHMARK(BM_ExactL)->DenseRange(0, 4);

static void BM_WilcoxonDistribution(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(wmw_distribution(n, n / 2).counts.size());
}
BENCHMARK(BM_WilcoxonDistribution)->Arg(20)->Arg(40)->Arg(80);

static void BM_OrientationFeasible(benchmark::State& state)
{
    auto g = full_graph({8, 4});
    for (auto _ : state)
        benchmark::DoNotOptimize(orientation_feasible(g, 8).feasible);
}
BENCHMARK(BM_OrientationFeasible);

static void BM_EulerianOrientation(benchmark::State& state)
{
    auto g = full_graph({10, 5});
    for (auto _ : state)
        benchmark::DoNotOptimize(eulerian_orientation(g).max_outdegree());
}
BENCHMARK(BM_EulerianOrientation);

static void BM_LpocvSample(benchmark::State& state)
{
    const auto learner = state.range(0) == 0 ? make_ridge_learner(1.0) : make_knn_learner(3);
    const int n = static_cast<int>(state.range(1));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        const auto sample = generate_data("null-gauss-10d", n, n / 2, ++seed);
        benchmark::DoNotOptimize(lpocv_u(*learner, sample.data, sample.labels).errors);
    }
}
BENCHMARK(BM_LpocvSample)->ArgsProduct({{0, 1}, {20, 40}});

static void BM_PermutationPValue(benchmark::State& state)
{
    const auto learner = make_ridge_learner(1.0);
    const auto sample = generate_data("null-gauss-10d", 20, 10, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(mc_null_pvalue(*learner, sample.data, 10, 40, 200, 7));
}
BENCHMARK(BM_PermutationPValue);

BENCHMARK_MAIN();
