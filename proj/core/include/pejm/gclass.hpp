#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string_view>

#include "pejm/weight.hpp"

namespace pejm {

/// Which family of basis symbols a Grothendieck class is written in.
enum class Basis {
  VermaG0,     // [M(mu)], Verma modules over g_0 = gl(n)
  SimpleG0,    // [L(mu)], simple gl(n)-modules
  VermaSuper,  // [M~(mu)], Verma supermodules
  KacSimple,   // [K(L(mu))], Kac modules induced from simples; output only
};

std::string_view to_string(Basis b);
Basis parse_basis(std::string_view text);

/// Finite integer combination of basis symbols indexed by weights.
///
/// Zero coefficients are never stored. Arithmetic between classes with different
/// basis tags or ranks throws InputError; conversion is always explicit.
class GClass {
 public:
  using Terms = std::map<Weight, std::int64_t>;

  GClass(Basis basis, std::size_t rank) : basis_(basis), rank_(rank) {}
  static GClass single(Basis basis, const Weight& w, std::int64_t coeff = 1);

  Basis basis() const { return basis_; }
  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::int64_t coefficient(const Weight& w) const;
  void add(const Weight& w, std::int64_t coeff);

  // Sum of all coefficients.
  std::int64_t mass() const;

  GClass& operator+=(const GClass& other);
  GClass& operator-=(const GClass& other);
  friend GClass operator+(GClass a, const GClass& b) { return a += b; }
  friend GClass operator-(GClass a, const GClass& b) { return a -= b; }
  friend GClass operator*(std::int64_t s, GClass a);

  friend bool operator==(const GClass&, const GClass&) = default;

 private:
  void require_compatible(const GClass& other) const;

  Basis basis_;
  std::size_t rank_;
  Terms terms_;
};

// sa * a + sb * b
GClass combine(const GClass& a, const GClass& b, std::int64_t sa, std::int64_t sb);

}  // namespace pejm
