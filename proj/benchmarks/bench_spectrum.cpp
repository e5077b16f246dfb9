#include <benchmark/benchmark.h>

#include "spectile/catalog.hpp"
#include "spectile/spectrum.hpp"

using namespace spectile;

static void BM_DualPatch(benchmark::State& state) {
    auto l = *decide_spectral(catalog::truncated_octahedron()).spectrum;
    for (auto _ : state) benchmark::DoNotOptimize(patch(l, static_cast<double>(state.range(0))));
}
BENCHMARK(BM_DualPatch)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_DifferenceSet(benchmark::State& state) {
    auto s = patch(*decide_spectral(catalog::truncated_octahedron()).spectrum, static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(difference_set(s));
    state.counters["points"] = static_cast<double>(s.points.size());
}
BENCHMARK(BM_DifferenceSet)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_OrthogonalityHexagon(benchmark::State& state) {
    auto hex = catalog::hexagon();
    auto s = patch(*decide_spectral(hex).spectrum, static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_orthogonality(hex, s));
}
BENCHMARK(BM_OrthogonalityHexagon)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_ChiEstimateHexagon(benchmark::State& state) {
    auto hex = catalog::hexagon();
    for (auto _ : state) benchmark::DoNotOptimize(chi_estimate(hex));
}
BENCHMARK(BM_ChiEstimateHexagon)->Unit(benchmark::kMillisecond);
