#include "pejm/jantzen.hpp"

#include <stdexcept>

#include "pejm/characters.hpp"
#include "pejm/kl.hpp"
#include "pejm/errors.hpp"
#include "pejm/odd_reflections.hpp"
#include "pejm/weights.hpp"
#include "pejm/weyl.hpp"

namespace pejm {

std::string_view to_string(AlphaFiniteness f) { return f == AlphaFiniteness::Finite ? "finite" : "free"; }

std::string_view to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::Zero: return "zero";
    case ReportStatus::Semisimple: return "semisimple";
    case ReportStatus::NonSemisimple: return "nonsemisimple";
    case ReportStatus::Unsupported: return "unsupported";
  }
  return "?";
}

std::string_view to_string(ConstituentForm f) {
  return f == ConstituentForm::SimpleSuper ? "SimpleSuper" : "KacSimple";
}

AlphaFiniteness alpha_finiteness(const RankContext& ctx, const Weight& lam, int simple_index) {
  const Weight& alpha = ctx.simple_root(simple_index);
  require_rank(lam, ctx.n(), "weight");
  const Rational p = pairing(lam + ctx.rho(), alpha);
  return is_integer(p) && p > 0 ? AlphaFiniteness::Finite : AlphaFiniteness::Free;
}

int simple_index_of(const RankContext& ctx, const Weight& alpha) {
  const auto& simple = ctx.simple_roots();
  for (std::size_t i = 0; i < simple.size(); ++i) {
    if (simple[i] == alpha) return static_cast<int>(i) + 1;
  }
  throw InputError(alpha.to_string() + " is not a simple root");
}

namespace {

void require_integral(const RankContext& ctx, const Weight& lam) {
  require_rank(lam, ctx.n(), "weight");
  if (!lam.is_integral()) throw InputError("weight " + lam.to_string() + " is not integral");
}

// ch T_s M(mu) = ch M(s . mu), applied termwise.
GClass twist_vermas(const RankContext& ctx, const GClass& cls, int simple_index) {
  const WeylElem s = WeylElem::simple_reflection(ctx.n(), simple_index);
  GClass out(Basis::VermaG0, ctx.n());
  for (const auto& [mu, c] : cls.terms()) out.add(dot_action(ctx, s, mu), c);
  return out;
}

JantzenReport zero_report(const RankContext& ctx) {
  JantzenReport r;
  r.status = ReportStatus::Zero;
  r.character = GClass(Basis::VermaG0, ctx.n());
  return r;
}

JantzenReport unsupported_report(std::string reason) {
  JantzenReport r;
  r.status = ReportStatus::Unsupported;
  r.reason = std::move(reason);
  return r;
}

GClass witness_character(const RankContext& ctx, const Weight& lam, const Weight& s_dot_lam) {
  return verma_super_expand(ctx, s_dot_lam) - verma_super_expand(ctx, lam);
}

bool multiplicities_nonnegative(const RankContext& ctx, const GClass& cls, const Weight& center,
                                int radius) {
  const std::size_t n = ctx.n();
  std::vector<std::int64_t> e(n, -radius);
  while (true) {
    Weight nu = center;
    for (std::size_t i = 0; i < n; ++i) nu[i] += e[i];
    if (weight_multiplicity(cls, nu) < 0) return false;
    std::size_t i = 0;
    while (i < n && e[i] == radius) e[i++] = -radius;
    if (i == n) return true;
    ++e[i];
  }
}

}  // namespace

GClass twisted_simple_character(const RankContext& ctx, const Weight& lam, int simple_index) {
  ctx.simple_root(simple_index);
  require_integral(ctx, lam);
  if (alpha_finiteness(ctx, lam, simple_index) == AlphaFiniteness::Finite) {
    return GClass(Basis::VermaG0, ctx.n());
  }
  if (!is_anti_dominant(ctx, lam) && !is_typical(ctx, lam)) {
    throw UnsupportedError("no character formula for the twisted simple of atypical, "
                           "non-antidominant " + lam.to_string());
  }
  // L~(lam) = K(L(lam)) here, and T_s commutes with the Kac functor.
  const GClass simple = simple_character(ctx, lam);
  return kac_induce(ctx, twist_vermas(ctx, simple, simple_index));
}

JantzenReport jantzen_middle_pe2(const RankContext& ctx, const Weight& lam) {
  if (ctx.n() != 2) throw InputError("the pe(2) closed form needs n = 2");
  require_integral(ctx, lam);
  const Rational gap = lam[1] - lam[0];
  if (gap <= 1) return zero_report(ctx);

  const WeylElem s = WeylElem::simple_reflection(2, 1);
  const Weight s_dot = dot_action(ctx, s, lam);
  JantzenReport r;
  // gap >= 2 makes lam antidominant, so L~(lam) = M~(lam).
  r.character = twisted_simple_character(ctx, lam, 1) - verma_super_expand(ctx, lam);
  if (gap == 2) {
    r.status = ReportStatus::NonSemisimple;
    r.constituents.push_back({s_dot, ConstituentForm::KacSimple, 1});
    r.socle.push_back(socle_of_kac(ctx, s_dot));
    r.top.push_back(s_dot);
    if (has_witness_shape(ctx, lam)) r.certificate = witness_for_weight(ctx, lam);
  } else {
    r.status = ReportStatus::Semisimple;
    r.constituents.push_back({s_dot, ConstituentForm::SimpleSuper, 1});
    r.socle.push_back(s_dot);
    r.top.push_back(s_dot);
  }
  return r;
}

JantzenReport jantzen_middle_kl(const RankContext& ctx, const Weight& lam, int simple_index) {
  ctx.simple_root(simple_index);
  require_integral(ctx, lam);
  if (alpha_finiteness(ctx, lam, simple_index) == AlphaFiniteness::Finite) return zero_report(ctx);
  if (!is_typical(ctx, lam)) {
    return unsupported_report("the KL pipeline covers typical weights only; " + lam.to_string() +
                              " is atypical");
  }
  if (!is_regular(ctx, lam)) {
    return unsupported_report("no simple character expansion for singular weight " + lam.to_string());
  }

  const OrbitPosition pos = orbit_position(ctx, lam);
  const GClass simple = simple_in_verma(ctx, pos.base, pos.w);
  // [rad T_s L(lam)] = [T_s L(lam)] - [L(lam)] since the top of T_s L(lam) is L(lam).
  const GClass radical = twist_vermas(ctx, simple, simple_index) - simple;
  const GClass in_simples = convert(ctx, radical, Basis::SimpleG0, pos.base);

  JantzenReport r;
  for (const auto& [mu, m] : in_simples.terms()) {
    if (m < 0) {
      throw std::logic_error("negative multiplicity of L" + mu.to_string() + " in rad T_s L" +
                             lam.to_string());
    }
    r.constituents.push_back({mu, ConstituentForm::SimpleSuper, m});
    r.socle.push_back(mu);
    r.top.push_back(mu);
  }
  r.status = r.constituents.empty() ? ReportStatus::Zero : ReportStatus::Semisimple;
  r.character = kac_induce(ctx, radical);
  return r;
}

JantzenReport jantzen_middle(const RankContext& ctx, const Weight& lam, int simple_index) {
  ctx.simple_root(simple_index);
  require_integral(ctx, lam);
  if (alpha_finiteness(ctx, lam, simple_index) == AlphaFiniteness::Finite) return zero_report(ctx);
  if (ctx.n() == 2) return jantzen_middle_pe2(ctx, lam);
  if (is_typical(ctx, lam)) return jantzen_middle_kl(ctx, lam, simple_index);
  if (simple_index == 1 && has_witness_shape(ctx, lam)) {
    JantzenReport r;
    r.status = ReportStatus::NonSemisimple;
    r.certificate = witness_for_weight(ctx, lam);
    r.character = r.certificate->u_character;
    r.socle.push_back(r.certificate->socle_member);
    return r;
  }
  return unsupported_report("atypical weight " + lam.to_string() +
                            " is not of witness shape; no general formula at n >= 3");
}

bool has_witness_shape(const RankContext& ctx, const Weight& lam) {
  if (ctx.n() < 2 || lam.rank() != ctx.n()) return false;
  const Weight v = lam + ctx.rho();
  if (v[0] != 0 || v[1] != 1) return false;
  for (std::size_t k = 1; k + 1 < ctx.n(); ++k) {
    if (!is_integer(v[k + 1]) || !(v[k + 1] > v[k])) return false;
  }
  return true;
}

WitnessCertificate witness_for_weight(const RankContext& ctx, const Weight& lam) {
  if (!has_witness_shape(ctx, lam)) {
    throw InputError(lam.to_string() + " is not of witness shape");
  }
  const WeylElem s = WeylElem::simple_reflection(ctx.n(), 1);
  WitnessCertificate cert{
      .lam = lam,
      .alpha = ctx.simple_root(1),
      .mu = lam - 2 * Weight::epsilon(ctx.n(), 1),
      .s_dot_lam = dot_action(ctx, s, lam),
      .socle_member = {},
      .top_excludes_mu = true,
      .u_character = GClass(Basis::VermaG0, ctx.n()),
      .translation = 0,
  };
  cert.socle_member = socle_of_kac(ctx, cert.s_dot_lam);
  cert.u_character = witness_character(ctx, lam, cert.s_dot_lam);
  return cert;
}

WitnessCertificate atypical_witness(const RankContext& ctx, const BlockKey& key) {
  if (ctx.n() < 2 || key.n != ctx.n()) throw InputError("witnesses need rank >= 2 and a matching key");
  if (!block_atypical(key)) throw InputError("block is typical; no witness exists");
  const std::size_t odd = key.odd_count();
  const std::size_t even = ctx.n() - odd;
  Weight v = Weight::zero(ctx.n());
  v[1] = 1;
  std::size_t k = 2;
  std::int64_t next = 2;
  for (std::size_t i = 1; i < even; ++i, next += 2) v[k++] = next;
  next = next - 1 > 1 ? next - 1 : 3;
  for (std::size_t i = 1; i < odd; ++i, next += 2) v[k++] = next;
  WitnessCertificate cert = witness_for_weight(ctx, v - ctx.rho());
  cert.translation = key.coset;
  return cert;
}

WitnessCheck validate_witness(const RankContext& ctx, const BlockKey& key,
                              const WitnessCertificate& cert) {
  WitnessCheck check;
  const Weight& lam = cert.lam;
  check.in_block = block_key(ctx, lam + cert.translation * ctx.omega()) == key;
  check.atypical = !is_typical(ctx, lam);
  check.anti_dominant = is_anti_dominant(ctx, lam);
  check.alpha_free = alpha_finiteness(ctx, lam, 1) == AlphaFiniteness::Free;
  const Weight s_dot = dot_action(ctx, WeylElem::simple_reflection(ctx.n(), 1), lam);
  const Weight mu = lam - 2 * Weight::epsilon(ctx.n(), 1);
  check.socle_matches = s_dot == cert.s_dot_lam && mu == cert.mu &&
                        socle_of_kac(ctx, s_dot) == mu && cert.socle_member == mu;
  const GClass u = witness_character(ctx, lam, s_dot);
  check.character_nonnegative = u == cert.u_character && multiplicities_nonnegative(ctx, u, s_dot, 2);
  return check;
}

BlockReport block_report(const RankContext& ctx, const BlockKey& key) {
  BlockReport r;
  r.key = key;
  r.atypical = block_atypical(key);
  if (r.atypical) {
    r.witness = atypical_witness(ctx, key);
    r.jantzen_middles = "contains a non-semisimple Jantzen middle";
    r.kl_theory = "excluded";
  } else {
    r.jantzen_middles = "all zero or semisimple";
    r.kl_theory = "not obstructed by this criterion";
  }
  return r;
}

}  // namespace pejm
