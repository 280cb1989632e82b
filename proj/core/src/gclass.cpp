#include "pejm/gclass.hpp"

#include "pejm/errors.hpp"

namespace pejm {

std::string_view to_string(Basis b) {
  switch (b) {
    case Basis::VermaG0: return "VermaG0";
    case Basis::SimpleG0: return "SimpleG0";
    case Basis::VermaSuper: return "VermaSuper";
    case Basis::KacSimple: return "KacSimple";
  }
  return "?";
}

Basis parse_basis(std::string_view text) {
  for (Basis b : {Basis::VermaG0, Basis::SimpleG0, Basis::VermaSuper, Basis::KacSimple}) {
    if (to_string(b) == text) return b;
  }
  throw InputError("unknown basis tag '" + std::string(text) + "'");
}

GClass GClass::single(Basis basis, const Weight& w, std::int64_t coeff) {
  GClass c(basis, w.rank());
  c.add(w, coeff);
  return c;
}

std::int64_t GClass::coefficient(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void GClass::add(const Weight& w, std::int64_t coeff) {
  if (w.rank() != rank_) throw InputError("weight rank does not match class rank");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t GClass::mass() const {
  std::int64_t m = 0;
  for (const auto& [w, c] : terms_) m += c;
  return m;
}

void GClass::require_compatible(const GClass& other) const {
  if (basis_ != other.basis_) {
    throw InputError("basis mismatch: " + std::string(to_string(basis_)) + " vs " +
                     std::string(to_string(other.basis_)));
  }
  if (rank_ != other.rank_) throw InputError("rank mismatch between classes");
}

GClass& GClass::operator+=(const GClass& other) {
  require_compatible(other);
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

GClass& GClass::operator-=(const GClass& other) {
  require_compatible(other);
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

GClass operator*(std::int64_t s, GClass a) {
  if (s == 0) {
    a.terms_.clear();
    return a;
  }
  for (auto& [w, c] : a.terms_) c *= s;
  return a;
}

GClass combine(const GClass& a, const GClass& b, std::int64_t sa, std::int64_t sb) {
  return sa * a + sb * b;
}

}  // namespace pejm
