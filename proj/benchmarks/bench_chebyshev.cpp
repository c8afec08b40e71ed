#include "specden/chebyshev.hpp"
#include "specden/dct.hpp"
#include "specden/random.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace specden;

static void BM_DctI(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    GaussianStream stream(5, 0);
    std::vector<double> values(m + 1);
    for (double& v : values) {
        v = stream.next();
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(dct_i(values));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DctI)->RangeMultiplier(4)->Range(64, 16384)->Complexity(benchmark::oNLogN);

static void BM_SquareCoeffs(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    GaussianStream stream(6, 0);
    std::vector<double> mu(m + 1);
    for (double& v : mu) {
        v = stream.next();
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(square_coeffs(mu));
    }
}
BENCHMARK(BM_SquareCoeffs)->RangeMultiplier(4)->Range(64, 4096);

// Coefficient tables at production-like settings: sigma = 0.005,
// n_t = 1000 parameter values, degrees 800..3200.
static void BM_BuildTables(benchmark::State& state) {
    std::vector<double> grid(1000);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid[i] = -1.0 + 2.0 * static_cast<double>(i) / 999.0;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_tables(0.005, grid, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_BuildTables)->Arg(800)->Arg(1600)->Arg(2400)->Arg(3200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
