#include "dgq/dgq.hpp"

#include <benchmark/benchmark.h>

using namespace dgq;

namespace {

void BM_PolynomialCohomology(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DgModel m = polynomial_model(n);
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_dims(m, -n, 6));
}
BENCHMARK(BM_PolynomialCohomology)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_McKayCohomology(benchmark::State& state) {
  const McKayData d = state.range(0) == 3 ? McKayData::make(3, {1, 1, 1}) : McKayData::make(5, {1, 1, 1, 2});
  const DgModel m = mckay_model(d);
  HomologyOptions opts;
  opts.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_dims(m, -6, 6, opts));
}
BENCHMARK(BM_McKayCohomology)->Args({3, 1})->Args({5, 1})->Args({5, 4})->Unit(benchmark::kMillisecond);

void BM_DeletedH0(benchmark::State& state) {
  const DgModel m = delete_vertex(mckay_model(McKayData::make(5, {1, 1, 1, 2})), 0);
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_dims(m, -1, 6));
}
BENCHMARK(BM_DeletedH0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
