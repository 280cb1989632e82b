#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "pejm/gclass.hpp"
#include "pejm/structure.hpp"
#include "pejm/weyl.hpp"

namespace pejm {

// ch M~(lam) = sum over subsets S of the g_{-1} roots of [M(lam + sum S)].
// Coefficients accumulate when subset sums collide; total mass is 2^{n(n-1)/2}.
GClass verma_super_expand(const RankContext& ctx, const Weight& lam);

// Tensor a VermaG0 class with the exterior algebra of g_{-1}, i.e. the character
// of the Kac module K(N) given ch N. Terms are expanded one by one.
GClass kac_induce(const RankContext& ctx, const GClass& g0_class);

// For integral regular lam: the regular antidominant base lam0 of its dot orbit
// and the unique w with lam = w . lam0.
struct OrbitPosition {
  Weight base;
  WeylElem w;
};
OrbitPosition orbit_position(const RankContext& ctx, const Weight& lam);

// The w with mu = w . base, if mu lies in the dot orbit of the regular base.
std::optional<WeylElem> orbit_element(const RankContext& ctx, const Weight& base, const Weight& mu);

// [L(lam)] in the VermaG0 basis. Antidominant lam gives [M(lam)] (regular or not);
// other lam must be regular integral, else UnsupportedError.
GClass simple_character(const RankContext& ctx, const Weight& lam);

// Basis change between VermaG0 and SimpleG0 over the dot orbit of base.
GClass convert(const RankContext& ctx, const GClass& cls, Basis target, const Weight& base);

// Number of ways to write v as a Z>=0 combination of eps_i - eps_j, i < j.
// Memoized on v; thread-safe.
std::uint64_t kostant_count(std::span<const std::int64_t> v);

// Weight multiplicity of a VermaG0 class at nu: sum_mu coeff(mu) * K(mu - nu).
std::int64_t weight_multiplicity(const GClass& cls, const Weight& nu);

// Weyl dimension formula for gl(n) highest weight lam (dominant integral).
std::int64_t weyl_dimension(const RankContext& ctx, const Weight& lam);

}  // namespace pejm
