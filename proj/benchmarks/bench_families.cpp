#include <benchmark/benchmark.h>

#include "defml/families.hpp"

using namespace defml;

static void BM_GRecurrence(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(g_by_recurrence(n));
}
BENCHMARK(BM_GRecurrence)->Arg(8)->Arg(16)->Arg(32);

static void BM_GConvolution(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(g_by_convolution(n));
}
BENCHMARK(BM_GConvolution)->Arg(8)->Arg(16)->Arg(32);

static void BM_GGenfun(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(g_by_genfun(n));
}
BENCHMARK(BM_GGenfun)->Arg(8)->Arg(16)->Arg(32);

static void BM_PhiMonicEgf(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(phi_monic_genfun(n));
}
BENCHMARK(BM_PhiMonicEgf)->Arg(8)->Arg(16)->Arg(32);

static void BM_Hypergeometric(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const Rational y(17, 5), h(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(g_hypergeometric(n, y, h));
}
BENCHMARK(BM_Hypergeometric)->Arg(5)->Arg(15)->Arg(30);
