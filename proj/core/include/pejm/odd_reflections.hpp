#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "pejm/structure.hpp"
#include "pejm/weight.hpp"

namespace pejm {

enum class StepKind { OddReflection, Inclusion };
std::string_view to_string(StepKind k);

/// One link of the chain b^r = b^0, ..., b^k = b. p and q are 0-based
/// coordinate indices with alpha = eps_p + eps_q (p == q for an inclusion 2 eps_p).
struct ChainStep {
  Weight alpha;
  StepKind kind;
  std::size_t p;
  std::size_t q;
};

// 2e1, e1+e2, 2e2, e1+e3, e2+e3, 2e3, ..., e_{n-1}+e_n, 2e_n; n(n+1)/2 steps.
std::vector<ChainStep> borel_chain(const RankContext& ctx);

struct TraceStep {
  Weight alpha;
  StepKind kind;
  Weight weight_after;
};

struct OddReflectionTrace {
  Weight start;
  Weight end;
  std::vector<TraceStep> steps;
};

// b^r-highest weight lam of a simple module to its b-highest weight, with the full trace.
std::pair<Weight, OddReflectionTrace> br_to_b(const RankContext& ctx, const Weight& lam);

// Inverse of br_to_b.
Weight b_to_br(const RankContext& ctx, const Weight& nu);

// b-highest weight of soc K(L(mu)), namely br_to_b(mu - (n-1) omega).
Weight socle_of_kac(const RankContext& ctx, const Weight& mu);

}  // namespace pejm
