#include <gtest/gtest.h>

#include <random>

#include "pejm/blocks.hpp"
#include "pejm/characters.hpp"
#include "pejm/errors.hpp"
#include "pejm/jantzen.hpp"
#include "pejm/odd_reflections.hpp"
#include "pejm/weights.hpp"
#include "support.hpp"

using namespace pejm;
using pejm::testing::int_weight;
using pejm::testing::random_int_weight;

namespace {

GClass verma_sum(std::size_t n, std::initializer_list<std::pair<Weight, std::int64_t>> terms) {
  GClass out(Basis::VermaG0, n);
  for (const auto& [w, c] : terms) out.add(w, c);
  return out;
}

// Expansion of sum m * L~(mu) with L~(mu) = K(L(mu)) for typical mu.
GClass constituents_character(const RankContext& ctx, const JantzenReport& r) {
  GClass total(Basis::VermaG0, ctx.n());
  for (const auto& c : r.constituents) {
    total += c.multiplicity * kac_induce(ctx, simple_character(ctx, c.weight));
  }
  return total;
}

}  // namespace

TEST(AlphaFiniteness, Examples) {
  const auto c2 = make_context(2);
  EXPECT_EQ(alpha_finiteness(c2, int_weight({0, 2}), 1), AlphaFiniteness::Free);
  EXPECT_EQ(alpha_finiteness(c2, int_weight({0, 0}), 1), AlphaFiniteness::Finite);
  EXPECT_EQ(alpha_finiteness(c2, Weight{Rational(1, 2), Rational(0)}, 1), AlphaFiniteness::Free);
  EXPECT_THROW(alpha_finiteness(c2, int_weight({0, 0}), 2), InputError);
  EXPECT_EQ(simple_index_of(make_context(3), int_weight({0, 1, -1})), 2);
  EXPECT_THROW(simple_index_of(make_context(3), int_weight({1, 0, -1})), InputError);
}

TEST(TwistedSimple, Examples) {
  const auto c2 = make_context(2);
  EXPECT_EQ(twisted_simple_character(c2, int_weight({0, 2}), 1),
            verma_sum(2, {{int_weight({1, 1}), 1}, {int_weight({0, 0}), 1}}));
  EXPECT_TRUE(twisted_simple_character(c2, int_weight({0, 0}), 1).empty());
  const auto c3 = make_context(3);
  EXPECT_EQ(twisted_simple_character(c3, int_weight({-2, 1, 4}), 1),
            verma_super_expand(c3, int_weight({0, -1, 4})));
}

TEST(TwistedSimple, AtypicalOutsideScope) {
  // lam + rho = (1, 2, 0): atypical, alpha-free for eps_1 - eps_2, not antidominant
  EXPECT_THROW(twisted_simple_character(make_context(3), int_weight({-1, 1, 0}), 1), UnsupportedError);
}

TEST(JantzenMiddle, RankTwoAtypical) {
  const auto c2 = make_context(2);
  const auto r = jantzen_middle(c2, int_weight({0, 2}), 1);
  EXPECT_EQ(r.status, ReportStatus::NonSemisimple);
  ASSERT_EQ(r.constituents.size(), 1u);
  EXPECT_EQ(r.constituents[0].weight, int_weight({1, 1}));
  EXPECT_EQ(r.constituents[0].form, ConstituentForm::KacSimple);
  EXPECT_EQ(r.constituents[0].multiplicity, 1);
  EXPECT_EQ(r.socle, (std::vector<Weight>{int_weight({0, 0})}));
  EXPECT_EQ(r.top, (std::vector<Weight>{int_weight({1, 1})}));
  ASSERT_TRUE(r.character.has_value());
  EXPECT_EQ(*r.character, verma_sum(2, {{int_weight({1, 1}), 1},
                                        {int_weight({0, 0}), 1},
                                        {int_weight({0, 2}), -1},
                                        {int_weight({-1, 1}), -1}}));
}

TEST(JantzenMiddle, RankTwoTypicalAndZero) {
  const auto c2 = make_context(2);
  const auto r = jantzen_middle(c2, int_weight({0, 3}), 1);
  EXPECT_EQ(r.status, ReportStatus::Semisimple);
  ASSERT_EQ(r.constituents.size(), 1u);
  EXPECT_EQ(r.constituents[0].weight, int_weight({2, 1}));
  EXPECT_EQ(r.constituents[0].form, ConstituentForm::SimpleSuper);
  const auto z = jantzen_middle(c2, int_weight({0, 0}), 1);
  EXPECT_EQ(z.status, ReportStatus::Zero);
  EXPECT_TRUE(z.constituents.empty());
}

TEST(JantzenMiddle, RankThreeTypical) {
  const auto c3 = make_context(3);
  const auto r = jantzen_middle(c3, int_weight({-2, 1, 4}), 1);
  EXPECT_EQ(r.status, ReportStatus::Semisimple);
  ASSERT_EQ(r.constituents.size(), 1u);
  EXPECT_EQ(r.constituents[0].weight, int_weight({0, -1, 4}));
  EXPECT_EQ(r.constituents[0].multiplicity, 1);
}

TEST(JantzenMiddle, ScopeAndErrors) {
  const auto c3 = make_context(3);
  // typical singular alpha-free: lam + rho = (0, 2, 2)
  EXPECT_EQ(jantzen_middle(c3, int_weight({-2, 1, 2}), 1).status, ReportStatus::Unsupported);
  EXPECT_FALSE(jantzen_middle(c3, int_weight({-2, 1, 2}), 1).reason.empty());
  EXPECT_THROW(jantzen_middle(c3, Weight{Rational(1, 2), Rational(0), Rational(0)}, 1), InputError);
  EXPECT_THROW(jantzen_middle(c3, int_weight({0, 0, 0}), 5), InputError);
  EXPECT_THROW(jantzen_middle(c3, int_weight({0, 0}), 1), InputError);
}

TEST(JantzenMiddle, AlphaFiniteIsZero) {
  std::mt19937 rng(53);
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto ctx = make_context(n);
    for (int trial = 0; trial < 100; ++trial) {
      const Weight lam = random_int_weight(rng, n, -4, 4);
      for (int i = 1; i < static_cast<int>(n); ++i) {
        if (alpha_finiteness(ctx, lam, i) != AlphaFiniteness::Finite) continue;
        const auto r = jantzen_middle(ctx, lam, i);
        EXPECT_EQ(r.status, ReportStatus::Zero);
        EXPECT_TRUE(r.constituents.empty());
        EXPECT_TRUE(!r.character || r.character->empty());
      }
    }
  }
}

TEST(JantzenMiddle, RankTwoGridAndCrossCheck) {
  const auto c2 = make_context(2);
  const auto s = WeylElem::simple_reflection(2, 1);
  for (int a = -5; a <= 5; ++a) {
    for (int b = -5; b <= 5; ++b) {
      const Weight lam = int_weight({a, b});
      const auto r = jantzen_middle(c2, lam, 1);
      const int d = b - a;
      const Weight sl = dot_action(c2, s, lam);
      if (d <= 1) {
        EXPECT_EQ(r.status, ReportStatus::Zero) << lam;
        continue;
      }
      ASSERT_EQ(r.constituents.size(), 1u) << lam;
      EXPECT_EQ(r.constituents[0].weight, sl);
      if (d == 2) {
        EXPECT_EQ(r.status, ReportStatus::NonSemisimple);
        EXPECT_EQ(r.constituents[0].form, ConstituentForm::KacSimple);
        EXPECT_EQ(r.socle, (std::vector<Weight>{socle_of_kac(c2, sl)}));
      } else {
        EXPECT_EQ(r.status, ReportStatus::Semisimple);
        EXPECT_EQ(r.constituents[0].form, ConstituentForm::SimpleSuper);
        const auto kl = jantzen_middle_kl(c2, lam, 1);
        EXPECT_EQ(kl.status, r.status);
        ASSERT_EQ(kl.constituents.size(), 1u);
        EXPECT_EQ(kl.constituents[0].weight, r.constituents[0].weight);
        EXPECT_EQ(kl.constituents[0].multiplicity, r.constituents[0].multiplicity);
        EXPECT_EQ(kl.character, r.character);
      }
    }
  }
}

TEST(JantzenMiddle, CharacterConservationRankThree) {
  const auto ctx = make_context(3);
  int checked = 0;
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      for (int c = -3; c <= 3; ++c) {
        const Weight lam = int_weight({a, b, c});
        if (!is_typical(ctx, lam) || !is_regular(ctx, lam)) continue;
        for (int i = 1; i <= 2; ++i) {
          if (alpha_finiteness(ctx, lam, i) != AlphaFiniteness::Free) continue;
          const auto r = jantzen_middle(ctx, lam, i);
          ASSERT_EQ(r.status, ReportStatus::Semisimple) << lam << " i=" << i;
          const GClass lhs = constituents_character(ctx, r);
          const GClass rhs = twisted_simple_character(ctx, lam, i) -
                             kac_induce(ctx, simple_character(ctx, lam));
          EXPECT_EQ(lhs, rhs) << lam;
          ASSERT_TRUE(r.character.has_value());
          EXPECT_EQ(*r.character, rhs);
          for (const auto& con : r.constituents) {
            EXPECT_GT(con.multiplicity, 0);
            EXPECT_TRUE(is_typical(ctx, con.weight));
            EXPECT_TRUE(orbit_element(ctx, orbit_position(ctx, lam).base, con.weight).has_value());
          }
          ++checked;
        }
      }
    }
  }
  EXPECT_GE(checked, 40);
}

TEST(Witness, Examples) {
  const auto c2 = make_context(2);
  const auto w2 = atypical_witness(c2, block_key(c2, distinguished_weight(c2, 0)));
  EXPECT_EQ(w2.lam, int_weight({-1, 1}));
  EXPECT_EQ(w2.mu, int_weight({-1, -1}));
  EXPECT_EQ(w2.s_dot_lam, int_weight({0, 0}));
  EXPECT_EQ(w2.socle_member, int_weight({-1, -1}));

  const auto c3 = make_context(3);
  const auto w3 = atypical_witness(c3, block_key(c3, distinguished_weight(c3, 0)));
  EXPECT_EQ(w3.lam, int_weight({-2, 0, 2}));
  EXPECT_EQ(w3.mu, int_weight({-2, -2, 2}));
  EXPECT_EQ(w3.s_dot_lam, int_weight({-1, -1, 2}));
  EXPECT_EQ(w3.socle_member, int_weight({-2, -2, 2}));

  const auto w31 = atypical_witness(c3, block_key(c3, distinguished_weight(c3, 1)));
  EXPECT_EQ(w31.lam + c3.rho(), int_weight({0, 1, 3}));
}

TEST(Witness, Errors) {
  const auto c3 = make_context(3);
  EXPECT_THROW(atypical_witness(c3, block_key(c3, distinguished_weight(c3, 2))), InputError);
  const auto c1 = make_context(1);
  EXPECT_THROW(atypical_witness(c1, block_key(c1, Weight::zero(1))), InputError);
}

TEST(Witness, NonIntegerCoset) {
  const auto c2 = make_context(2);
  const auto key = block_key(c2, Weight{Rational(1, 2), Rational(1, 2)});
  const auto cert = atypical_witness(c2, key);
  EXPECT_EQ(cert.translation, Rational(1, 2));
  EXPECT_TRUE(validate_witness(c2, key, cert).ok());
}

TEST(Witness, ValidForAllAtypicalIntegerKeys) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto ctx = make_context(n);
    for (const auto& key : block_census(ctx, static_cast<int>(n))) {
      if (!key.atypical) continue;
      const auto cert = atypical_witness(ctx, key);
      const auto check = validate_witness(ctx, key, cert);
      EXPECT_TRUE(check.in_block);
      EXPECT_TRUE(check.atypical);
      EXPECT_TRUE(check.anti_dominant);
      EXPECT_TRUE(check.alpha_free);
      EXPECT_TRUE(check.socle_matches);
      EXPECT_TRUE(check.character_nonnegative);
      EXPECT_EQ(cert.mu, cert.lam - Rational(2) * Weight::epsilon(n, 1));
      EXPECT_EQ(socle_of_kac(ctx, cert.s_dot_lam), cert.mu);
      EXPECT_EQ(block_key(ctx, cert.lam), key);
    }
  }
}

TEST(Witness, JantzenMiddleAtWitnessIsNonSemisimple) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto ctx = make_context(n);
    const auto cert = atypical_witness(ctx, block_key(ctx, distinguished_weight(ctx, 0)));
    const auto r = jantzen_middle(ctx, cert.lam, 1);
    EXPECT_EQ(r.status, ReportStatus::NonSemisimple);
    ASSERT_TRUE(r.certificate.has_value());
    EXPECT_EQ(r.socle, (std::vector<Weight>{cert.mu}));
  }
}

TEST(Witness, TamperedCertificateFails) {
  const auto c3 = make_context(3);
  const auto key = block_key(c3, distinguished_weight(c3, 0));
  auto cert = atypical_witness(c3, key);
  cert.socle_member = cert.lam;
  EXPECT_FALSE(validate_witness(c3, key, cert).ok());
  auto other = atypical_witness(c3, key);
  other.lam = distinguished_weight(c3, 2);
  EXPECT_FALSE(validate_witness(c3, key, other).ok());
}

TEST(BlockReport, Examples) {
  const auto c2 = make_context(2);
  const auto atyp = block_report(c2, block_key(c2, distinguished_weight(c2, 0)));
  EXPECT_TRUE(atyp.atypical);
  ASSERT_TRUE(atyp.witness.has_value());
  EXPECT_EQ(atyp.witness->lam, int_weight({-1, 1}));
  EXPECT_EQ(atyp.kl_theory, "excluded");
  const auto typ = block_report(c2, block_key(c2, distinguished_weight(c2, 2)));
  EXPECT_FALSE(typ.atypical);
  EXPECT_FALSE(typ.witness.has_value());
  EXPECT_EQ(typ.jantzen_middles, "all zero or semisimple");
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto ctx = make_context(n);
    const auto r = block_report(ctx, block_key(ctx, distinguished_weight(ctx, static_cast<int>(n) - 1)));
    EXPECT_FALSE(r.atypical);
    EXPECT_EQ(r.kl_theory, "not obstructed by this criterion");
  }
}
