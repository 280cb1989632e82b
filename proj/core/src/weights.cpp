#include "pejm/weights.hpp"

#include "pejm/errors.hpp"

namespace pejm {

Weight dot_action(const RankContext& ctx, const WeylElem& w, const Weight& lam) {
  require_rank(lam, ctx.n(), "weight");
  if (w.rank() != ctx.n()) throw InputError("Weyl element rank does not match context");
  const Weight shifted = lam + ctx.rho();
  Weight out = Weight::zero(ctx.n());
  for (std::size_t k = 0; k < ctx.n(); ++k) out[static_cast<std::size_t>(w(k))] = shifted[k];
  return out - ctx.rho();
}

Rational pairing(const Weight& lam, const Weight& alpha) {
  if (lam.rank() != alpha.rank()) throw InputError("rank mismatch in pairing");
  Rational num;
  Rational norm;
  for (std::size_t i = 0; i < lam.rank(); ++i) {
    num += lam[i] * alpha[i];
    norm += alpha[i] * alpha[i];
  }
  if (norm == 0) throw InputError("pairing with the zero root");
  return 2 * num / norm;
}

Typicality typicality(const RankContext& ctx, const Weight& lam) {
  require_rank(lam, ctx.n(), "weight");
  const Weight v = lam + ctx.rho();
  Typicality t;
  t.value = 1;
  t.typical = true;
  for (std::size_t i = 0; i < ctx.n(); ++i) {
    for (std::size_t j = i + 1; j < ctx.n(); ++j) {
      const Rational diff = v[i] - v[j];
      const Rational plus = diff + 1;
      const Rational minus = diff - 1;
      if (plus == 0 || minus == 0) t.typical = false;
      t.value *= BigRational(plus.numerator(), plus.denominator());
      t.value *= BigRational(minus.numerator(), minus.denominator());
    }
  }
  if (!t.typical) t.value = 0;
  return t;
}

bool is_typical(const RankContext& ctx, const Weight& lam) {
  require_rank(lam, ctx.n(), "weight");
  const Weight v = lam + ctx.rho();
  for (std::size_t i = 0; i < ctx.n(); ++i) {
    for (std::size_t j = i + 1; j < ctx.n(); ++j) {
      const Rational diff = v[i] - v[j];
      if (diff == 1 || diff == -1) return false;
    }
  }
  return true;
}

std::string_view to_string(Dominance d) {
  switch (d) {
    case Dominance::Dominant: return "dominant";
    case Dominance::AntiDominant: return "anti_dominant";
    case Dominance::Both: return "both";
    case Dominance::Neither: return "neither";
  }
  return "?";
}

Dominance dominance_class(const RankContext& ctx, const Weight& lam) {
  require_rank(lam, ctx.n(), "weight");
  const Weight v = lam + ctx.rho();
  bool positive_integer = false;
  bool negative_integer = false;
  for (std::size_t i = 0; i < ctx.n(); ++i) {
    for (std::size_t j = i + 1; j < ctx.n(); ++j) {
      const Rational p = v[i] - v[j];
      if (!is_integer(p)) continue;
      if (p > 0) positive_integer = true;
      if (p < 0) negative_integer = true;
    }
  }
  if (positive_integer && negative_integer) return Dominance::Neither;
  if (positive_integer) return Dominance::Dominant;
  if (negative_integer) return Dominance::AntiDominant;
  return Dominance::Both;
}

bool is_anti_dominant(const RankContext& ctx, const Weight& lam) {
  const Dominance d = dominance_class(ctx, lam);
  return d == Dominance::AntiDominant || d == Dominance::Both;
}

bool is_regular(const RankContext& ctx, const Weight& lam) {
  require_rank(lam, ctx.n(), "weight");
  const Weight v = lam + ctx.rho();
  for (std::size_t i = 0; i < ctx.n(); ++i) {
    for (std::size_t j = i + 1; j < ctx.n(); ++j) {
      if (v[i] == v[j]) return false;
    }
  }
  return true;
}

Weight hat(const RankContext& ctx, const Weight& lam) {
  require_rank(lam, ctx.n(), "weight");
  Weight out = Weight::zero(ctx.n());
  for (std::size_t i = 0; i < ctx.n(); ++i) out[i] = -lam[ctx.n() - 1 - i];
  return out;
}

// The cone spanned by eps_i - eps_j (i < j) and eps_i + eps_j (i <= j) is cut out
// by: every prefix sum of the difference is >= 0 and the full sum is even. Each
// generator has nonnegative prefix sums, even generators sum to 0 and odd ones to 2;
// conversely d - (sum(d)/2) * 2 eps_n is a nonnegative combination of simple roots.
bool order_leq(const RankContext& ctx, const Weight& mu, const Weight& lam) {
  require_rank(mu, ctx.n(), "mu");
  require_rank(lam, ctx.n(), "lambda");
  const Weight d = lam - mu;
  if (!d.has_integer_coords()) {
    throw InputError("order_leq needs lambda - mu with integer coordinates");
  }
  std::int64_t prefix = 0;
  for (std::size_t k = 0; k < ctx.n(); ++k) {
    prefix += d[k].numerator();
    if (prefix < 0) return false;
  }
  return prefix % 2 == 0;
}

}  // namespace pejm
