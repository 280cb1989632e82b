#include <gtest/gtest.h>

#include <random>

#include "pejm/odd_reflections.hpp"
#include "support.hpp"

using namespace pejm;
using pejm::testing::int_weight;
using pejm::testing::random_int_weight;

namespace {
Weight e(std::size_t n, std::size_t i) { return Weight::epsilon(n, i); }
}  // namespace

TEST(BorelChain, Examples) {
  const auto c1 = borel_chain(make_context(1));
  ASSERT_EQ(c1.size(), 1u);
  EXPECT_EQ(c1[0].alpha, int_weight({2}));
  EXPECT_EQ(c1[0].kind, StepKind::Inclusion);

  const auto c2 = borel_chain(make_context(2));
  ASSERT_EQ(c2.size(), 3u);
  EXPECT_EQ(c2[0].alpha, int_weight({2, 0}));
  EXPECT_EQ(c2[1].alpha, int_weight({1, 1}));
  EXPECT_EQ(c2[1].kind, StepKind::OddReflection);
  EXPECT_EQ(c2[2].alpha, int_weight({0, 2}));
  EXPECT_EQ(c2[2].kind, StepKind::Inclusion);

  const auto c3 = borel_chain(make_context(3));
  ASSERT_EQ(c3.size(), 6u);
  EXPECT_EQ(c3[3].alpha, int_weight({1, 0, 1}));
  EXPECT_EQ(c3[4].alpha, int_weight({0, 1, 1}));
  EXPECT_EQ(c3[4].kind, StepKind::OddReflection);
  EXPECT_EQ(c3[5].alpha, int_weight({0, 0, 2}));
  EXPECT_EQ(c3[5].kind, StepKind::Inclusion);
}

TEST(BorelChain, KindsMatchRoots) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto chain = borel_chain(make_context(n));
    EXPECT_EQ(chain.size(), n * (n + 1) / 2);
    for (const auto& step : chain) {
      EXPECT_EQ(step.alpha.coordinate_sum(), Rational(2));
      EXPECT_EQ(step.kind == StepKind::Inclusion, step.p == step.q);
    }
  }
}

TEST(BrToB, Examples) {
  const auto c3 = make_context(3);
  EXPECT_EQ(br_to_b(c3, int_weight({0, 0, 1})).first, int_weight({1, 1, 3}));
  const auto c2 = make_context(2);
  EXPECT_EQ(br_to_b(c2, int_weight({3, 3})).first, int_weight({3, 3}));
  EXPECT_EQ(br_to_b(c2, Weight{Rational(5, 2), Rational(5, 2)}).first, (Weight{Rational(5, 2), Rational(5, 2)}));
  EXPECT_EQ(br_to_b(c2, int_weight({0, 1})).first, int_weight({1, 2}));
}

TEST(BToBr, Examples) {
  const auto c2 = make_context(2);
  EXPECT_EQ(b_to_br(c2, int_weight({1, 2})), int_weight({0, 1}));
  EXPECT_EQ(b_to_br(c2, int_weight({-4, -4})), int_weight({-4, -4}));
}

TEST(SocleOfKac, Examples) {
  const auto c2 = make_context(2);
  EXPECT_EQ(socle_of_kac(c2, int_weight({1, 1})), int_weight({0, 0}));
  EXPECT_EQ(socle_of_kac(make_context(3), int_weight({-1, -1, 2})), int_weight({-2, -2, 2}));
  EXPECT_EQ(socle_of_kac(c2, int_weight({4, 4})), int_weight({3, 3}));
}

TEST(Trace, Invariants) {
  std::mt19937 rng(43);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto ctx = make_context(n);
    const auto chain = borel_chain(ctx);
    for (int trial = 0; trial < 100; ++trial) {
      const Weight lam = random_int_weight(rng, n, -2, 2);
      const auto [end, trace] = br_to_b(ctx, lam);
      ASSERT_EQ(trace.steps.size(), chain.size());
      EXPECT_EQ(trace.start, lam);
      EXPECT_EQ(trace.end, end);
      Weight prev = lam;
      Weight fired = Weight::zero(n);
      for (std::size_t k = 0; k < chain.size(); ++k) {
        const auto& step = trace.steps[k];
        EXPECT_EQ(step.alpha, chain[k].alpha);
        EXPECT_EQ(step.kind, chain[k].kind);
        const Weight diff = step.weight_after - prev;
        EXPECT_TRUE(diff.is_zero() || diff == step.alpha);
        if (step.kind == StepKind::Inclusion) EXPECT_TRUE(diff.is_zero());
        fired += diff;
        prev = step.weight_after;
      }
      EXPECT_EQ(prev, end);
      EXPECT_EQ(end - lam, fired);
    }
  }
}

// lam_1 = lam_2 < lam_3 < ... < lam_n maps to lam + (n-1) omega - eps_1 - eps_2.
TEST(BrToB, ClosedFormFamilyExhaustive) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto ctx = make_context(n);
    std::vector<int> vals(n - 1);
    // strictly increasing sequences of length n-1 in [-3, 3]
    auto rec = [&](auto&& self, std::size_t pos, int lo) -> void {
      if (pos == n - 1) {
        std::vector<Rational> c{vals[0]};
        for (int v : vals) c.emplace_back(v);
        const Weight lam(c);
        const Weight expected = lam + Rational(static_cast<int>(n) - 1) * ctx.omega() - e(n, 0) - e(n, 1);
        EXPECT_EQ(br_to_b(ctx, lam).first, expected) << lam;
        return;
      }
      for (int v = lo; v <= 3; ++v) {
        vals[pos] = v;
        self(self, pos + 1, v + 1);
      }
    };
    rec(rec, 0, -3);
  }
}

TEST(BrToB, RoundTripBijection) {
  std::mt19937 rng(47);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto ctx = make_context(n);
    for (int trial = 0; trial < 1000; ++trial) {
      const Weight lam = random_int_weight(rng, n, -6, 6);
      const Weight nu = br_to_b(ctx, lam).first;
      EXPECT_EQ(b_to_br(ctx, nu), lam);
      EXPECT_EQ(br_to_b(ctx, b_to_br(ctx, lam)).first, lam);
    }
  }
}
