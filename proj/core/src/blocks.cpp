#include "pejm/blocks.hpp"

#include <algorithm>
#include <set>

#include "pejm/errors.hpp"

namespace pejm {

bool operator<(const BlockKey& a, const BlockKey& b) {
  if (a.n != b.n) return a.n < b.n;
  return std::lexicographical_compare(a.residues.begin(), a.residues.end(), b.residues.begin(),
                                      b.residues.end());
}

std::size_t BlockKey::odd_count() const {
  return static_cast<std::size_t>(
      std::count(residues.begin(), residues.end(), coset + Rational(1)));
}

namespace {

std::size_t odd_entries(const Weight& v) {
  std::size_t odd = 0;
  for (const auto& c : v.coords()) odd += floor_mod(c, 2) == 1 ? 1 : 0;
  return odd;
}

}  // namespace

BlockKey block_key(const RankContext& ctx, const Weight& lam) {
  require_rank(lam, ctx.n(), "weight");
  if (!lam.is_integral()) throw InputError("block_key needs an integral weight, got " + lam.to_string());
  const Weight v = lam + ctx.rho();
  BlockKey key;
  key.n = ctx.n();
  for (const auto& c : v.coords()) key.residues.push_back(floor_mod(c, 2));
  std::sort(key.residues.begin(), key.residues.end());
  key.coset = floor_mod(key.residues.front(), 1);
  key.atypical = block_atypical(key);
  if (key.coset == 0) {
    const std::size_t odd = key.odd_count();
    for (int i = 0; i <= static_cast<int>(ctx.n()); ++i) {
      if (odd_entries(distinguished_weight(ctx, i) + ctx.rho()) == odd) {
        key.partial_index = i;
        break;
      }
    }
  }
  return key;
}

bool same_block(const RankContext& ctx, const Weight& lam, const Weight& mu) {
  return block_key(ctx, lam) == block_key(ctx, mu);
}

bool block_atypical(const BlockKey& key) {
  for (std::size_t i = 0; i < key.residues.size(); ++i) {
    for (std::size_t j = i + 1; j < key.residues.size(); ++j) {
      const Rational d = key.residues[j] - key.residues[i];
      if (d == 1 || d == -1) return true;
    }
  }
  return false;
}

std::vector<BlockKey> block_census(const RankContext& ctx, int box) {
  if (box < 0) throw InputError("census box must be nonnegative");
  const std::size_t n = ctx.n();
  std::set<BlockKey> keys;
  std::vector<std::int64_t> c(n, -box);
  Weight lam = Weight::zero(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) lam[i] = c[i];
    keys.insert(block_key(ctx, lam));
    std::size_t i = 0;
    while (i < n && c[i] == box) c[i++] = -box;
    if (i == n) break;
    ++c[i];
  }
  return {keys.begin(), keys.end()};
}

}  // namespace pejm
