#include "pejm/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "pejm/errors.hpp"
#include "pejm/kl.hpp"
#include "pejm/weights.hpp"

namespace pejm {

GClass kac_induce(const RankContext& ctx, const GClass& g0_class) {
  if (g0_class.basis() != Basis::VermaG0) throw InputError("kac_induce expects a VermaG0 class");
  if (g0_class.rank() != ctx.n()) throw InputError("class rank does not match context");
  GClass current = g0_class;
  for (const Weight& beta : ctx.odd_roots_minus()) {
    GClass shifted(Basis::VermaG0, ctx.n());
    for (const auto& [w, c] : current.terms()) shifted.add(w + beta, c);
    current += shifted;
  }
  return current;
}

GClass verma_super_expand(const RankContext& ctx, const Weight& lam) {
  require_rank(lam, ctx.n(), "weight");
  return kac_induce(ctx, GClass::single(Basis::VermaG0, lam));
}

OrbitPosition orbit_position(const RankContext& ctx, const Weight& lam) {
  require_rank(lam, ctx.n(), "weight");
  if (!lam.is_integral()) throw UnsupportedError("weight " + lam.to_string() + " is not integral");
  if (!is_regular(ctx, lam)) throw UnsupportedError("weight " + lam.to_string() + " is singular");
  const Weight v = lam + ctx.rho();
  std::vector<Rational> sorted(v.coords().begin(), v.coords().end());
  std::sort(sorted.begin(), sorted.end());
  const Weight base = Weight(sorted) - ctx.rho();
  auto w = orbit_element(ctx, base, lam);
  return {base, *w};
}

std::optional<WeylElem> orbit_element(const RankContext& ctx, const Weight& base, const Weight& mu) {
  require_rank(base, ctx.n(), "base weight");
  require_rank(mu, ctx.n(), "weight");
  const Weight u = base + ctx.rho();
  const Weight v = mu + ctx.rho();
  std::vector<int> images(ctx.n(), 0);
  std::vector<bool> used(ctx.n(), false);
  for (std::size_t k = 0; k < ctx.n(); ++k) {
    bool found = false;
    for (std::size_t p = 0; p < ctx.n(); ++p) {
      if (!used[p] && v[p] == u[k]) {
        images[k] = static_cast<int>(p) + 1;
        used[p] = true;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return WeylElem::from_images(std::move(images));
}

GClass simple_character(const RankContext& ctx, const Weight& lam) {
  require_rank(lam, ctx.n(), "weight");
  if (is_anti_dominant(ctx, lam)) return GClass::single(Basis::VermaG0, lam);
  const OrbitPosition pos = orbit_position(ctx, lam);
  return simple_in_verma(ctx, pos.base, pos.w);
}

GClass convert(const RankContext& ctx, const GClass& cls, Basis target, const Weight& base) {
  const bool source_ok = cls.basis() == Basis::VermaG0 || cls.basis() == Basis::SimpleG0;
  const bool target_ok = target == Basis::VermaG0 || target == Basis::SimpleG0;
  if (!source_ok || !target_ok) {
    throw InputError("convert supports only VermaG0 <-> SimpleG0, got " +
                     std::string(to_string(cls.basis())) + " -> " + std::string(to_string(target)));
  }
  if (cls.rank() != ctx.n()) throw InputError("class rank does not match context");
  require_regular_antidominant(ctx, base);
  if (cls.basis() == target) return cls;
  GClass out(target, ctx.n());
  for (const auto& [mu, c] : cls.terms()) {
    auto w = orbit_element(ctx, base, mu);
    if (!w) {
      throw InputError("weight " + mu.to_string() + " is outside the dot orbit of " + base.to_string());
    }
    const GClass piece = target == Basis::SimpleG0 ? verma_in_simple(ctx, base, *w)
                                                   : simple_in_verma(ctx, base, *w);
    out += c * piece;
  }
  return out;
}

namespace {

class KostantTable {
 public:
  std::uint64_t count(std::vector<std::int64_t> v) {
    std::lock_guard lock(mu_);
    return count_locked(v);
  }

 private:
  std::uint64_t count_locked(const std::vector<std::int64_t>& v) {
    std::int64_t prefix = 0;
    for (auto c : v) {
      prefix += c;
      if (prefix < 0) return 0;
    }
    if (prefix != 0) return 0;
    if (v.size() <= 1) return 1;
    if (auto it = memo_.find(v); it != memo_.end()) return it->second;

    // Distribute v[0] over the roots eps_1 - eps_j, then recurse on coordinates 2..n.
    std::vector<std::int64_t> rest(v.begin() + 1, v.end());
    std::uint64_t total = 0;
    distribute(v[0], 0, rest, total);
    memo_.emplace(v, total);
    return total;
  }

  void distribute(std::int64_t remaining, std::size_t j, std::vector<std::int64_t>& rest,
                  std::uint64_t& total) {
    if (j + 1 == rest.size()) {
      rest[j] += remaining;
      total += count_locked(rest);
      rest[j] -= remaining;
      return;
    }
    for (std::int64_t c = 0; c <= remaining; ++c) {
      rest[j] += c;
      distribute(remaining - c, j + 1, rest, total);
      rest[j] -= c;
    }
  }

  std::mutex mu_;
  std::map<std::vector<std::int64_t>, std::uint64_t> memo_;
};

KostantTable& kostant_table() {
  static KostantTable table;
  return table;
}

}  // namespace

std::uint64_t kostant_count(std::span<const std::int64_t> v) {
  return kostant_table().count(std::vector<std::int64_t>(v.begin(), v.end()));
}

std::int64_t weight_multiplicity(const GClass& cls, const Weight& nu) {
  if (cls.basis() != Basis::VermaG0) throw InputError("weight_multiplicity expects a VermaG0 class");
  require_rank(nu, cls.rank(), "nu");
  std::int64_t total = 0;
  std::vector<std::int64_t> diff(cls.rank());
  for (const auto& [mu, c] : cls.terms()) {
    for (std::size_t i = 0; i < cls.rank(); ++i) {
      if (mu[i].denominator() == 1 && nu[i].denominator() == 1) {
        diff[i] = mu[i].numerator() - nu[i].numerator();
        continue;
      }
      const Rational d = mu[i] - nu[i];
      if (!is_integer(d)) {
        throw InputError("non-integral difference between " + mu.to_string() + " and " + nu.to_string());
      }
      diff[i] = d.numerator();
    }
    // Cheap cone test first; most terms of a truncated window fail it.
    std::int64_t prefix = 0;
    bool in_cone = true;
    for (auto x : diff) {
      prefix += x;
      if (prefix < 0) in_cone = false;
    }
    if (!in_cone || prefix != 0) continue;
    total += c * static_cast<std::int64_t>(kostant_count(diff));
  }
  return total;
}

std::int64_t weyl_dimension(const RankContext& ctx, const Weight& lam) {
  require_rank(lam, ctx.n(), "weight");
  const Weight v = lam + ctx.rho();
  Rational dim = 1;
  for (std::size_t i = 0; i < ctx.n(); ++i) {
    for (std::size_t j = i + 1; j < ctx.n(); ++j) {
      const Rational d = v[i] - v[j];
      if (!is_integer(d) || d <= 0) {
        throw InputError("weyl_dimension needs a dominant integral weight, got " + lam.to_string());
      }
      dim *= d / static_cast<std::int64_t>(j - i);
    }
  }
  return dim.numerator();
}

}  // namespace pejm
