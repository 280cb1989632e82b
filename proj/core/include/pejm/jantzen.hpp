#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pejm/blocks.hpp"
#include "pejm/gclass.hpp"
#include "pejm/structure.hpp"
#include "pejm/weight.hpp"

namespace pejm {

enum class AlphaFiniteness { Finite, Free };
std::string_view to_string(AlphaFiniteness f);

// Simple roots are addressed by their 1-based index i, meaning eps_i - eps_{i+1}.
AlphaFiniteness alpha_finiteness(const RankContext& ctx, const Weight& lam, int simple_index);

// Index i of a simple root given as a vector; throws InputError if alpha is not simple.
int simple_index_of(const RankContext& ctx, const Weight& alpha);

// [T_s L~(lam)] in the VermaG0 basis. Empty for alpha-finite lam. For alpha-free
// lam, requires L~(lam) = K(L(lam)) (typical or antidominant lam) and a computable
// [L(lam)]; throws UnsupportedError otherwise.
GClass twisted_simple_character(const RankContext& ctx, const Weight& lam, int simple_index);

/// Data showing that U_alpha(lam) is not semisimple for an antidominant atypical
/// lam with (lam+rho)_1 = 0, (lam+rho)_2 = 1 and lam+rho strictly increasing.
struct WitnessCertificate {
  Weight lam;
  Weight alpha;      // eps_1 - eps_2
  Weight mu;         // lam - 2 eps_2
  Weight s_dot_lam;
  Weight socle_member;  // socle_of_kac(s . lam); equals mu when valid
  // Ext^1(L~(lam), L~(mu)) = 0 because M~(lam) = L~(lam); recorded, not recomputed.
  bool top_excludes_mu = true;
  GClass u_character;   // expand(M~(s . lam)) - expand(M~(lam)), VermaG0 basis
  // The certificate block is the requested one shifted by -translation * omega.
  Rational translation;
};

enum class ReportStatus { Zero, Semisimple, NonSemisimple, Unsupported };
std::string_view to_string(ReportStatus s);

enum class ConstituentForm { SimpleSuper, KacSimple };
std::string_view to_string(ConstituentForm f);

struct Constituent {
  Weight weight;
  ConstituentForm form;
  std::int64_t multiplicity;
};

struct JantzenReport {
  ReportStatus status = ReportStatus::Unsupported;
  std::vector<Constituent> constituents;
  // b-highest weights of soc and top of U when known.
  std::vector<Weight> socle;
  std::vector<Weight> top;
  std::optional<WitnessCertificate> certificate;
  std::optional<GClass> character;
  std::string reason;  // why the query is unsupported; empty otherwise
};

// Dispatching entry point: alpha-finite lam, the pe(2) closed form, the KL
// pipeline for typical regular lam, and the witness shape for atypical lam.
JantzenReport jantzen_middle(const RankContext& ctx, const Weight& lam, int simple_index);

// The two routes behind jantzen_middle, exposed for cross-checks.
JantzenReport jantzen_middle_pe2(const RankContext& ctx, const Weight& lam);
JantzenReport jantzen_middle_kl(const RankContext& ctx, const Weight& lam, int simple_index);

// True iff lam has the witness shape at rank >= 2.
bool has_witness_shape(const RankContext& ctx, const Weight& lam);
WitnessCertificate witness_for_weight(const RankContext& ctx, const Weight& lam);

// Deterministic witness for an atypical block: lam + rho = (0, 1, x_3, ..., x_n),
// remaining evens first then odds, smallest values.
WitnessCertificate atypical_witness(const RankContext& ctx, const BlockKey& key);

struct WitnessCheck {
  bool in_block = false;
  bool atypical = false;
  bool anti_dominant = false;
  bool alpha_free = false;
  bool socle_matches = false;
  bool character_nonnegative = false;
  bool ok() const {
    return in_block && atypical && anti_dominant && alpha_free && socle_matches &&
           character_nonnegative;
  }
};

// Recomputes every certificate claim from scratch.
WitnessCheck validate_witness(const RankContext& ctx, const BlockKey& key,
                              const WitnessCertificate& cert);

struct BlockReport {
  BlockKey key;
  bool atypical = false;
  std::optional<WitnessCertificate> witness;
  std::string jantzen_middles;
  std::string kl_theory;
};

BlockReport block_report(const RankContext& ctx, const BlockKey& key);

}  // namespace pejm
