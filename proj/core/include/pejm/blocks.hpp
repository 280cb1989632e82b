#pragma once

#include <optional>
#include <vector>

#include "pejm/structure.hpp"
#include "pejm/weight.hpp"

namespace pejm {

/// Complete invariant of the block relation generated by lam ~ w . lam and
/// lam ~ lam +- 2 eps_k on integral weights: the sorted multiset of entries of
/// lam + rho reduced into [0, 2).
struct BlockKey {
  std::size_t n = 0;
  std::vector<Rational> residues;  // sorted, each in [0, 2)
  Rational coset;                  // common value of the residues mod 1, in [0, 1)
  bool atypical = false;
  // i with key(distinguished_weight(i)) == key; integer-coset keys only.
  std::optional<int> partial_index;

  // Orders and compares on (n, residues); the other fields are derived.
  friend bool operator==(const BlockKey& a, const BlockKey& b) {
    return a.n == b.n && a.residues == b.residues;
  }
  friend bool operator<(const BlockKey& a, const BlockKey& b);

  std::size_t odd_count() const;  // residues equal to coset + 1
};

BlockKey block_key(const RankContext& ctx, const Weight& lam);
bool same_block(const RankContext& ctx, const Weight& lam, const Weight& mu);
bool block_atypical(const BlockKey& key);

// Distinct keys of all integer weights in [-box, box]^n, sorted.
std::vector<BlockKey> block_census(const RankContext& ctx, int box);

}  // namespace pejm
