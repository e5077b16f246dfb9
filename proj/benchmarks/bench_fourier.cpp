#include <benchmark/benchmark.h>

#include "spectile/catalog.hpp"
#include "spectile/fourier.hpp"
#include "spectile/oracle.hpp"

using namespace spectile;

namespace {

Vec sample_xi() { return Vec{Rational(7, 3), Rational(-5, 11), Rational(13, 17)}; }

}  // namespace

static void BM_FtIndicatorFree(benchmark::State& state) {
    auto p = catalog::truncated_octahedron();
    auto xi = sample_xi();
    for (auto _ : state) benchmark::DoNotOptimize(ft_indicator(p, xi));
}
BENCHMARK(BM_FtIndicatorFree);

static void BM_FtIndicatorPlan(benchmark::State& state) {
    FourierPlan plan(catalog::truncated_octahedron());
    auto xi = sample_xi();
    for (auto _ : state) benchmark::DoNotOptimize(plan.indicator(xi));
}
BENCHMARK(BM_FtIndicatorPlan);

static void BM_FtSimplexOracle(benchmark::State& state) {
    auto p = catalog::truncated_octahedron();
    auto xi = sample_xi();
    for (auto _ : state) benchmark::DoNotOptimize(oracle::simplex_ft(p, xi));
}
BENCHMARK(BM_FtSimplexOracle);

static void BM_UnitPhase(benchmark::State& state) {
    long k = 1;
    for (auto _ : state) benchmark::DoNotOptimize(unit_phase(Rational(k++ % 100003, 100003)));
}
BENCHMARK(BM_UnitPhase);
