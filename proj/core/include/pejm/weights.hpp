#pragma once

#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "pejm/structure.hpp"
#include "pejm/weight.hpp"
#include "pejm/weyl.hpp"

namespace pejm {

using BigRational = boost::multiprecision::cpp_rational;

// w(lam + rho) - rho, where w sends eps_k to eps_{w(k)}.
Weight dot_action(const RankContext& ctx, const WeylElem& w, const Weight& lam);

// <lam, alpha^vee> for the form <eps_i, eps_j> = delta_ij. Throws on alpha = 0.
Rational pairing(const Weight& lam, const Weight& alpha);

struct Typicality {
  bool typical = false;
  // T_+(lam) * T_-(lam); may exceed 64 bits for large ranks.
  BigRational value;
};

Typicality typicality(const RankContext& ctx, const Weight& lam);
bool is_typical(const RankContext& ctx, const Weight& lam);

enum class Dominance { Dominant, AntiDominant, Both, Neither };
std::string_view to_string(Dominance d);

Dominance dominance_class(const RankContext& ctx, const Weight& lam);
bool is_anti_dominant(const RankContext& ctx, const Weight& lam);

// Entries of lam + rho pairwise distinct (trivial stabilizer under the dot action).
bool is_regular(const RankContext& ctx, const Weight& lam);

// -w_0 lam: negate and reverse.
Weight hat(const RankContext& ctx, const Weight& lam);

// mu <= lam in the highest-weight order generated by lam - alpha <= lam for
// alpha in {eps_i - eps_j : i < j} and {eps_i + eps_j : i <= j}.
// Throws InputError when lam - mu has a non-integer coordinate.
bool order_leq(const RankContext& ctx, const Weight& mu, const Weight& lam);

}  // namespace pejm
