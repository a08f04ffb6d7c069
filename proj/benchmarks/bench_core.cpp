#include "isokura/basin.hpp"
#include "isokura/equilibria.hpp"
#include "isokura/integrate.hpp"
#include "isokura/model.hpp"

#include <benchmark/benchmark.h>

using namespace isokura;

static void BM_rhs(benchmark::State& state) {
    const Coupling k(-1.0, 1.0);
    Vec3 t{0.3, 2.1, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(rhs(t, k));
    }
}
BENCHMARK(BM_rhs);

static void BM_jacobian(benchmark::State& state) {
    const Coupling k(-1.0, 1.0);
    Vec3 t{0.3, 2.1, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(jacobian(t, k));
    }
}
BENCHMARK(BM_jacobian);

static void BM_numeric_spectrum(benchmark::State& state) {
    const Mat3 j = jacobian({0.3, 2.1, 1.0}, Coupling(-1.0, 1.0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(numeric_spectrum(j));
    }
}
BENCHMARK(BM_numeric_spectrum);

static void BM_limit_point(benchmark::State& state) {
    const Coupling k(-1.0, 1.0);
    IntegratorConfig cfg{};
    cfg.t_max = 2000.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(limit_point({0.4, 1.9, 0.0}, k, cfg));
    }
}
BENCHMARK(BM_limit_point);

static void BM_sweep(benchmark::State& state) {
    SweepConfig cfg{.resolution = static_cast<int>(state.range(0)),
                    .coupling = Coupling(-1.0, 1.0)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep(cfg));
    }
}
BENCHMARK(BM_sweep)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
