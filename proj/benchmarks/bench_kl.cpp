#include <benchmark/benchmark.h>

#include "pejm/kl.hpp"

namespace {

// Full P_{x,y} table for S_n from a cold cache.
void BM_KLTable(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto elems = pejm::all_elements(n);
  for (auto _ : state) {
    pejm::KLCache::global().clear();
    std::int64_t sum = 0;
    for (const auto& x : elems) {
      for (const auto& y : elems) sum += pejm::kl_polynomial(x, y).at_one();
    }
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_KLTable)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_BruhatLifting(benchmark::State& state) {
  const auto elems = pejm::all_elements(5);
  for (auto _ : state) {
    int count = 0;
    for (const auto& x : elems) {
      for (const auto& y : elems) count += pejm::bruhat_leq(x, y);
    }
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_BruhatLifting)->Unit(benchmark::kMillisecond);

}  // namespace
