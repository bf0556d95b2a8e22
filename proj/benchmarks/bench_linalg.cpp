#include "dgq/linalg.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace dgq;
using linalg::SparseRow;

namespace {

// Random sparse rows with small integer entries, a third of them dependent.
std::vector<SparseRow<Rational>> random_rows(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> val(-3, 3), pct(0, 99);
  std::vector<SparseRow<Rational>> out;
  for (std::size_t i = 0; i < rows; ++i) {
    SparseRow<Rational> r;
    if (i % 3 == 2) {
      std::map<linalg::Column, Rational> sum;
      for (const auto& [c, x] : out[i - 1]) sum[c] += 2 * x;
      for (const auto& [c, x] : out[i - 2]) sum[c] -= x;
      for (const auto& [c, x] : sum) {
        if (x != 0) r.emplace_back(c, x);
      }
    } else {
      for (std::size_t c = 0; c < cols; ++c) {
        const int v = val(rng);
        if (pct(rng) < 10 && v != 0) r.emplace_back(static_cast<linalg::Column>(c), v);
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto rows = random_rows(n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::rank(rows));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(64, 256)->Unit(benchmark::kMillisecond);

void BM_Nullspace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto rows = random_rows(n / 2, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::nullspace(rows, n));
}
BENCHMARK(BM_Nullspace)->RangeMultiplier(2)->Range(64, 256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
