#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles/combinatorics.hpp"
#include "pejm/blocks.hpp"
#include "pejm/errors.hpp"
#include "pejm/weights.hpp"
#include "support.hpp"

using namespace pejm;
using pejm::testing::int_coords;
using pejm::testing::int_weight;
using pejm::testing::random_int_weight;

TEST(BlockKey, Examples) {
  const auto c2 = make_context(2);
  const auto k = block_key(c2, int_weight({0, 2}));
  EXPECT_EQ(k.residues, (std::vector<Rational>{0, 1}));
  EXPECT_TRUE(k.atypical);
  const auto t = block_key(c2, distinguished_weight(c2, 1));
  EXPECT_EQ(t.residues, (std::vector<Rational>{0, 0}));
  EXPECT_FALSE(t.atypical);
  const auto h = block_key(c2, Weight{Rational(1, 2), Rational(1, 2)});
  EXPECT_EQ(h.residues, (std::vector<Rational>{Rational(1, 2), Rational(3, 2)}));
  EXPECT_EQ(h.coset, Rational(1, 2));
  EXPECT_TRUE(h.atypical);
  EXPECT_FALSE(h.partial_index.has_value());
}

TEST(BlockKey, NonIntegralRejected) {
  EXPECT_THROW(block_key(make_context(2), Weight{Rational(1, 2), Rational(0)}), InputError);
  EXPECT_THROW(same_block(make_context(2), Weight{Rational(1, 2), Rational(0)}, int_weight({0, 0})),
               InputError);
}

TEST(BlockKey, PartialIndex) {
  const auto c3 = make_context(3);
  const auto k = block_key(c3, int_weight({-2, 0, 2}));
  EXPECT_TRUE(k.atypical);
  ASSERT_TRUE(k.partial_index.has_value());
  EXPECT_EQ(*k.partial_index, 0);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto ctx = make_context(n);
    for (int i = 0; i <= static_cast<int>(n); ++i) {
      const auto key = block_key(ctx, distinguished_weight(ctx, i));
      ASSERT_TRUE(key.partial_index.has_value());
      EXPECT_EQ(*key.partial_index, i);
    }
  }
}

TEST(SameBlock, Examples) {
  const auto c2 = make_context(2);
  EXPECT_TRUE(same_block(c2, int_weight({0, 2}), int_weight({0, 0})));
  EXPECT_FALSE(same_block(c2, distinguished_weight(c2, 1), distinguished_weight(c2, 2)));
  const Weight lam = int_weight({3, -4});
  EXPECT_TRUE(same_block(c2, lam, lam + int_weight({2, 0})));
  EXPECT_TRUE(same_block(c2, lam, lam - int_weight({0, 2})));
}

TEST(BlockAtypical, Examples) {
  const auto c3 = make_context(3);
  EXPECT_TRUE(block_atypical(block_key(c3, distinguished_weight(c3, 0))));
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto ctx = make_context(n);
    EXPECT_FALSE(block_atypical(block_key(ctx, distinguished_weight(ctx, static_cast<int>(n) - 1))));
  }
  EXPECT_TRUE(block_atypical(block_key(make_context(2), Weight{Rational(1, 2), Rational(1, 2)})));
}

TEST(BlockKey, InvariantUnderGeneratorMoves) {
  std::mt19937 rng(37);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto ctx = make_context(n);
    const auto elems = all_elements(n);
    std::uniform_int_distribution<std::size_t> pick_w(0, elems.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_k(0, n - 1);
    for (int trial = 0; trial < 200; ++trial) {
      Weight lam = random_int_weight(rng, n, -5, 5);
      if (trial % 2) lam += Weight::constant(n, Rational(1, 3));
      const auto key = block_key(ctx, lam);
      EXPECT_EQ(key, block_key(ctx, dot_action(ctx, elems[pick_w(rng)], lam)));
      const Weight e = Rational(2) * Weight::epsilon(n, pick_k(rng));
      EXPECT_EQ(key, block_key(ctx, lam + e));
      EXPECT_EQ(key, block_key(ctx, lam - e));
    }
  }
}

TEST(BlockKey, AgreesWithReachabilityOracle) {
  std::mt19937 rng(41);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto ctx = make_context(n);
    const oracle::BlockGraph graph(ctx, 5);
    for (int trial = 0; trial < 500; ++trial) {
      const Weight a = random_int_weight(rng, n, -3, 3);
      // Bias half the pairs towards the same block.
      Weight b = random_int_weight(rng, n, -3, 3);
      if (trial % 2) {
        for (std::size_t k = 0; k < n; ++k) {
          b[k] = a[k] + Rational(2 * ((b[k].numerator() % 2 + 2) % 2) - 2 * (b[k].numerator() > 1));
        }
      }
      EXPECT_EQ(same_block(ctx, a, b), graph.connected(int_coords(a), int_coords(b))) << a << " " << b;
    }
  }
}

TEST(BlockCensus, CountsIntegerCosetKeys) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto ctx = make_context(n);
    const auto keys = block_census(ctx, static_cast<int>(n));
    EXPECT_EQ(keys.size(), n + 1) << n;
    std::set<int> indices;
    for (const auto& k : keys) {
      ASSERT_TRUE(k.partial_index.has_value());
      indices.insert(*k.partial_index);
      EXPECT_EQ(k.atypical, *k.partial_index + 2 <= static_cast<int>(n));
    }
    EXPECT_EQ(indices.size(), n + 1);
  }
  EXPECT_EQ(block_census(make_context(3), 7).size(), 4u);
  EXPECT_THROW(block_census(make_context(3), -1), InputError);
}

TEST(BlockKey, TypicalKeyMeansEveryMemberTypical) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto ctx = make_context(n);
    std::vector<std::int64_t> v(n, -3);
    while (true) {
      const Weight lam(std::vector<Rational>(v.begin(), v.end()));
      if (!block_atypical(block_key(ctx, lam))) EXPECT_TRUE(is_typical(ctx, lam)) << lam;
      std::size_t k = 0;
      while (k < n && v[k] == 3) v[k++] = -3;
      if (k == n) break;
      ++v[k];
    }
  }
}
