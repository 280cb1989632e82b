#include <benchmark/benchmark.h>

#include "pejm/blocks.hpp"
#include "pejm/jantzen.hpp"

namespace {

void BM_BlockCensus(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto ctx = pejm::make_context(n);
  for (auto _ : state) benchmark::DoNotOptimize(pejm::block_census(ctx, static_cast<int>(n)).size());
}
BENCHMARK(BM_BlockCensus)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_WitnessValidation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto ctx = pejm::make_context(n);
  const auto key = pejm::block_key(ctx, pejm::distinguished_weight(ctx, 0));
  const auto cert = pejm::atypical_witness(ctx, key);
  for (auto _ : state) benchmark::DoNotOptimize(pejm::validate_witness(ctx, key, cert).ok());
}
BENCHMARK(BM_WitnessValidation)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace
