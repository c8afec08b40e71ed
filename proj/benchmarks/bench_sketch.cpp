#include "specden/estimators.hpp"
#include "specden/hamiltonian.hpp"
#include "specden/operator.hpp"

#include <benchmark/benchmark.h>

using namespace specden;

static void BM_SparseMatvecBlock(benchmark::State& state) {
    const SparseSymmetric ham = build_hamiltonian(1, 6.0, 0.6, -4.0, 8.0);
    const Eigen::MatrixXd x = sample_gaussian(ham.dim(), state.range(0), 1, 0);
    Eigen::MatrixXd y(x.rows(), x.cols());
    for (auto _ : state) {
        ham.apply_block(x, y);
        benchmark::DoNotOptimize(y.data());
    }
}
BENCHMARK(BM_SparseMatvecBlock)->Arg(1)->Arg(16)->Arg(80);

// Full sketch accumulation on the n = 1000 electronic-structure matrix.
static void BM_AccumulateSketch(benchmark::State& state) {
    const SparseSymmetric ham = build_hamiltonian(1, 6.0, 0.6, -4.0, 8.0);
    const SpectralInterval interval = estimate_spectral_interval(ham, 0.01);
    const AffineTransformed mapped = affine_transform(ham, interval);

    EstimatorConfig cfg;
    cfg.degree = static_cast<int>(state.range(0));
    cfg.n_omega = 40;
    cfg.n_psi = 40;
    cfg.sigma = 0.05;
    cfg.seed = 1;
    for (int i = 0; i < 100; ++i) {
        cfg.grid.push_back(-1.0 + 2.0 * i / 99.0);
    }
    const KernelTables tables = build_tables(cfg.sigma, cfg.grid, cfg.degree);
    for (auto _ : state) {
        benchmark::DoNotOptimize(accumulate_sketch(mapped, tables, cfg));
    }
}
BENCHMARK(BM_AccumulateSketch)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
