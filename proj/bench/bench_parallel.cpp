// Serial vs OpenMP sweep over the same plan.

#include <benchmark/benchmark.h>

#include "udw/sweep.hpp"

namespace {

udw::SweepPlan plan()
{
    udw::SweepPlan p = udw::preset("fig5");
    p.range.steps = 64;
    return p;
}

void BM_sweep_serial(benchmark::State& st)
{
    const auto p = plan();
    for (auto _ : st) {
        benchmark::DoNotOptimize(udw::run_sweep_serial(p, udw::QuadratureSpec{}));
    }
}

void BM_sweep_parallel(benchmark::State& st)
{
    const auto p = plan();
    for (auto _ : st) {
        benchmark::DoNotOptimize(udw::run_sweep(p, udw::QuadratureSpec{}));
    }
}

void BM_bilinear_wightman_contour(benchmark::State& st)
{
    udw::Detector a;
    a.gap = 10.0;
    a.coupling = 0.01;
    const udw::Detector b = a;
    const udw::PairGeometry g{10.0, 0.0, 0.0};
    for (auto _ : st) {
        benchmark::DoNotOptimize(udw::smeared_bilinear(udw::KernelKind::wightman, a, b, g, udw::Placement::theta,
                                                       udw::kMinusPlus, udw::QuadratureSpec{}));
    }
}

}  // namespace

BENCHMARK(BM_sweep_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bilinear_wightman_contour)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
