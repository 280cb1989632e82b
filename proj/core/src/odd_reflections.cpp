#include "pejm/odd_reflections.hpp"

namespace pejm {

std::string_view to_string(StepKind k) {
  return k == StepKind::OddReflection ? "odd_reflection" : "inclusion";
}

std::vector<ChainStep> borel_chain(const RankContext& ctx) {
  const std::size_t n = ctx.n();
  std::vector<ChainStep> chain;
  chain.reserve(n * (n + 1) / 2);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t p = 0; p < q; ++p) {
      chain.push_back({Weight::epsilon(n, p) + Weight::epsilon(n, q), StepKind::OddReflection, p, q});
    }
    chain.push_back({2 * Weight::epsilon(n, q), StepKind::Inclusion, q, q});
  }
  return chain;
}

std::pair<Weight, OddReflectionTrace> br_to_b(const RankContext& ctx, const Weight& lam) {
  require_rank(lam, ctx.n(), "weight");
  OddReflectionTrace trace;
  trace.start = lam;
  Weight current = lam;
  for (const ChainStep& step : borel_chain(ctx)) {
    if (step.kind == StepKind::OddReflection && current[step.p] != current[step.q]) {
      current += step.alpha;
    }
    trace.steps.push_back({step.alpha, step.kind, current});
  }
  trace.end = current;
  return {current, std::move(trace)};
}

Weight b_to_br(const RankContext& ctx, const Weight& nu) {
  require_rank(nu, ctx.n(), "weight");
  Weight current = nu;
  const auto chain = borel_chain(ctx);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    // Adding eps_p + eps_q keeps coordinates p and q (un)equal, so this undoes the forward step.
    if (it->kind == StepKind::OddReflection && current[it->p] != current[it->q]) {
      current -= it->alpha;
    }
  }
  return current;
}

Weight socle_of_kac(const RankContext& ctx, const Weight& mu) {
  require_rank(mu, ctx.n(), "weight");
  const Rational shift = static_cast<std::int64_t>(ctx.n()) - 1;
  return br_to_b(ctx, mu - shift * ctx.omega()).first;
}

}  // namespace pejm
