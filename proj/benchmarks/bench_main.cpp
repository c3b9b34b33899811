#include "quinn/morita.hpp"

#include <benchmark/benchmark.h>

using namespace quinn;

static void BM_TorusColourings(benchmark::State& state) {
  CrossedComplex a = iota1(FinGroup::symmetric(static_cast<int>(state.range(0))));
  SimpSet t = torus();
  for (auto _ : state) benchmark::DoNotOptimize(count_colourings(t, a));
}
BENCHMARK(BM_TorusColourings)->Arg(3)->Arg(4);

static void BM_PrismCircleMatrix(benchmark::State& state) {
  CrossedComplex a = iota1(FinGroup::symmetric(3));
  Stratification p = catalog("prism-circle");
  for (auto _ : state) benchmark::DoNotOptimize(quinn_matrix(p, a, 0));
}
BENCHMARK(BM_PrismCircleMatrix);

static void BM_CirclePi1(benchmark::State& state) {
  CrossedComplex a = iota1(FinGroup::symmetric(3));
  SimpSet c = circle();
  for (auto _ : state) benchmark::DoNotOptimize(crs_pi1(c, a));
}
BENCHMARK(BM_CirclePi1);

static void BM_CylinderTensor(benchmark::State& state) {
  CrossedComplex a = iota1(FinGroup::symmetric(3));
  Bimodule b = lin2_bimodule(cobordism_profunctor(catalog("prism-circle"), a).prof);
  for (auto _ : state) benchmark::DoNotOptimize(tensor_over(b, b));
}
BENCHMARK(BM_CylinderTensor);

static void BM_QuantumDouble(benchmark::State& state) {
  FinGroup s3 = FinGroup::symmetric(3);
  for (auto _ : state) benchmark::DoNotOptimize(quantum_double_oracle(s3, false));
}
BENCHMARK(BM_QuantumDouble);
BENCHMARK_MAIN();
