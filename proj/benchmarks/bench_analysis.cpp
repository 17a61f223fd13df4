#include <benchmark/benchmark.h>

#include "defml/analysis.hpp"
#include "defml/families.hpp"
#include "defml/tridiagonal.hpp"

using namespace defml;

static void BM_PhiZeros(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(phi_zeros(n, 1.0));
}
BENCHMARK(BM_PhiZeros)->Arg(10)->Arg(20)->Arg(40);

static void BM_GaussRule(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_rule(n, 1.0));
}
BENCHMARK(BM_GaussRule)->Arg(6)->Arg(12)->Arg(24);

static void BM_TridiagBisect(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const JacobiMatrix J = JacobiMatrix::phi_monic(n, 1.0);
  std::vector<double> off(J.beta.size());
  for (std::size_t i = 0; i < off.size(); ++i) off[i] = std::sqrt(J.beta[i]);
  for (auto _ : state) benchmark::DoNotOptimize(tridiag_eigen_bisect(J.alpha, off));
}
BENCHMARK(BM_TridiagBisect)->Arg(10)->Arg(20)->Arg(40);

static void BM_IntegrateWeighted(benchmark::State& state) {
  // A representative orthogonality cell: degree-4 times degree-6 member.
  const FamilySequence phi = phi_by_recurrence(6);
  const BivarPoly p4 = phi.at(4).substitute_h(Rational(1));
  const BivarPoly p6 = phi.at(6).substitute_h(Rational(1));
  const auto f = [&](double y) {
    return p4.eval<double>(y, 1.0) * p6.eval<double>(y, 1.0);
  };
  for (auto _ : state)
    benchmark::DoNotOptimize(integrate_weighted(f, 1.0, 1e-10));
}
BENCHMARK(BM_IntegrateWeighted);

static void BM_WeightMoment(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(weight_moment(24, 2.0));
}
BENCHMARK(BM_WeightMoment);

BENCHMARK_MAIN();
