#include <benchmark/benchmark.h>

#include "pejm/characters.hpp"
#include "pejm/kl.hpp"
#include "pejm/structure.hpp"

namespace {

void BM_KostantCount(benchmark::State& state) {
  const std::int64_t k = state.range(0);
  const std::vector<std::int64_t> v{k, k, 0, -k, -k};
  for (auto _ : state) benchmark::DoNotOptimize(pejm::kostant_count(v));
}
BENCHMARK(BM_KostantCount)->Arg(2)->Arg(4)->Arg(8);

void BM_SuperExpand(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto ctx = pejm::make_context(n);
  const auto lam = pejm::Weight::zero(n);
  for (auto _ : state) benchmark::DoNotOptimize(pejm::verma_super_expand(ctx, lam).size());
}
BENCHMARK(BM_SuperExpand)->DenseRange(3, 6);

// Multiplicity of the central weight in the finite-dimensional gl(4) simple of highest weight (4,3,1,0).
void BM_SimpleMultiplicity(benchmark::State& state) {
  const auto ctx = pejm::make_context(4);
  const pejm::Weight base = pejm::Weight{0, 2, 5, 7} - ctx.rho();
  const auto ch = pejm::simple_in_verma(ctx, base, pejm::longest_element(4));
  const pejm::Weight nu{2, 2, 2, 2};
  for (auto _ : state) benchmark::DoNotOptimize(pejm::weight_multiplicity(ch, nu));
}
BENCHMARK(BM_SimpleMultiplicity);

}  // namespace
