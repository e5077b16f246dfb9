#include <benchmark/benchmark.h>

#include "spectile/catalog.hpp"
#include "spectile/lattice.hpp"
#include "spectile/tiling.hpp"

using namespace spectile;

static void BM_HullTruncatedOctahedron(benchmark::State& state) {
    auto pts = catalog::truncated_octahedron().vertices();
    for (auto _ : state) benchmark::DoNotOptimize(Polytope::from_vertices(pts));
}
BENCHMARK(BM_HullTruncatedOctahedron);

static void BM_ZonotopeRhombicIcosahedron(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(catalog::rhombic_icosahedron());
}
BENCHMARK(BM_ZonotopeRhombicIcosahedron);

static void BM_VenkovMcMullen(benchmark::State& state) {
    auto p = catalog::truncated_octahedron();
    for (auto _ : state) benchmark::DoNotOptimize(venkov_mcmullen(p));
}
BENCHMARK(BM_VenkovMcMullen);

static void BM_PackingVerify(benchmark::State& state) {
    auto p = catalog::truncated_octahedron();
    auto l = lattice_T(p);
    for (auto _ : state) benchmark::DoNotOptimize(packing_verify(p, l));
}
BENCHMARK(BM_PackingVerify)->Unit(benchmark::kMillisecond);

static void BM_LatticeBall(benchmark::State& state) {
    auto l = lattice_T(catalog::truncated_octahedron());
    Rational r2 = Rational(state.range(0) * state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(l.points_in_ball(r2));
}
BENCHMARK(BM_LatticeBall)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
