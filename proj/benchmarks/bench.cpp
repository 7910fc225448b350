#include <benchmark/benchmark.h>

#include "tribrac/tribrac.hpp"

using namespace tribrac;

static void BM_Enumerate3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_horizontal(3, {4, static_cast<int>(state.range(0))}));
}
BENCHMARK(BM_Enumerate3)->Arg(1)->Arg(4);

static void BM_Enumerate4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_horizontal(4, {4, static_cast<int>(state.range(0))}));
}
BENCHMARK(BM_Enumerate4)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Homology(benchmark::State& state) {
  auto t = load_example("5.7").tribracket;
  const int deg = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(homology(t, Side::lb, deg));
}
BENCHMARK(BM_Homology)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_SmithNormalForm(benchmark::State& state) {
  auto t = load_example("5.7").tribracket;
  auto b = boundary_matrix(t, Side::nie, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(b.matrix));
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void BM_Colorings(benchmark::State& state) {
  auto t = load_example("5.7").tribracket;
  auto d = load_table("8_18");
  ColoringOptions o;
  o.engine = state.range(0) ? Engine::propagation : Engine::brute_force;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_region_colorings(d, t, o));
}
BENCHMARK(BM_Colorings)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Invariant(benchmark::State& state) {
  auto e = load_example("5.6");
  auto d = load_table("L7a1");
  for (auto _ : state) benchmark::DoNotOptimize(invariant(d, e.tribracket, e.cocycle));
}
BENCHMARK(BM_Invariant)->Unit(benchmark::kMillisecond);

static void BM_VerifyBridge(benchmark::State& state) {
  auto t = load_example("5.7").tribracket;
  for (auto _ : state) benchmark::DoNotOptimize(verify_bridge(t, 3));
}
BENCHMARK(BM_VerifyBridge)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
