#include <benchmark/benchmark.h>

#include "coneforge/coneforge.hpp"
#include "coneforge/triangular.hpp"

using namespace coneforge;

namespace {

AlgebraDescriptor algebra_for(const benchmark::State& state) {
  const int k = static_cast<int>(state.range(1));
  return state.range(0) == 0 ? AlgebraDescriptor::sym_real(k) : AlgebraDescriptor::lorentz(k);
}

void args(benchmark::internal::Benchmark* b) {
  for (int r : {2, 3, 5, 8}) b->Args({0, r});
  for (int n : {2, 6, 16}) b->Args({1, n});
}

void BM_Spectral(benchmark::State& state) {
  const AlgebraDescriptor d = algebra_for(state);
  SampleStream rng(1, 0);
  const Element x = sample_element(d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_decompose(x));
}
BENCHMARK(BM_Spectral)->Apply(args);

void BM_TriangularDecompose(benchmark::State& state) {
  const AlgebraDescriptor d = algebra_for(state);
  const JordanFrame f = standard_frame(d);
  SampleStream rng(2, 0);
  const Element x = sample_cone(d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(triangular_decompose(x, f));
}
BENCHMARK(BM_TriangularDecompose)->Apply(args);

void BM_W1(benchmark::State& state) {
  const AlgebraDescriptor d = algebra_for(state);
  SampleStream rng(3, 0);
  const Element x = sample_cone(d, rng), y = sample_cone(d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(w1_apply(x, y));
}
BENCHMARK(BM_W1)->Apply(args);

void BM_W2(benchmark::State& state) {
  const AlgebraDescriptor d = algebra_for(state);
  const JordanFrame f = standard_frame(d);
  SampleStream rng(4, 0);
  const Element x = sample_cone(d, rng), y = sample_cone(d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(w2_apply(x, y, f));
}
BENCHMARK(BM_W2)->Apply(args);

void BM_LorentzClosedFormT(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const AlgebraDescriptor d = AlgebraDescriptor::lorentz(n);
  SampleStream rng(5, 0);
  const LorentzElement x = to_lorentz(sample_cone(d, rng)), y = to_lorentz(sample_cone(d, rng));
  Vector u(n, 0.0);
  u[0] = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(lorentz_t_apply(y, x, u));
}
BENCHMARK(BM_LorentzClosedFormT)->Arg(2)->Arg(6)->Arg(16);

}  // namespace
BENCHMARK_MAIN();
