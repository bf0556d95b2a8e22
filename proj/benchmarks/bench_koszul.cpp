#include "dgq/dgq.hpp"

#include <benchmark/benchmark.h>

using namespace dgq;

namespace {

void BM_ComputeJn(benchmark::State& state) {
  const QuadraticPresentation p = polynomial_presentation(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(compute_jn(p, n));
}
BENCHMARK(BM_ComputeJn)->Args({3, 3})->Args({4, 3})->Args({4, 4})->Args({5, 4})->Unit(benchmark::kMillisecond);

void BM_GeneralModel(benchmark::State& state) {
  const QuadraticPresentation p = polynomial_presentation(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_model_general(p, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GeneralModel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_McKayModel(benchmark::State& state) {
  const McKayData d = McKayData::make(6, {1, 1, 1, 3});
  for (auto _ : state) benchmark::DoNotOptimize(mckay_model(d));
}
BENCHMARK(BM_McKayModel)->Unit(benchmark::kMicrosecond);

void BM_DSquaredMcKay(benchmark::State& state) {
  const DgModel m = mckay_model(McKayData::make(6, {1, 1, 1, 3}));
  for (auto _ : state) benchmark::DoNotOptimize(check_d_squared(m.differential, 4));
}
BENCHMARK(BM_DSquaredMcKay)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
