#include "pejm/weight.hpp"

#include <algorithm>
#include <ostream>

#include "pejm/errors.hpp"

namespace pejm {
namespace {

void require_same_rank(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) {
    throw InputError("rank mismatch: " + std::to_string(a.rank()) + " vs " +
                     std::to_string(b.rank()));
  }
}

}  // namespace

Weight Weight::epsilon(std::size_t n, std::size_t i) {
  if (i >= n) throw InputError("epsilon index out of range");
  Weight w = zero(n);
  w.coords_[i] = 1;
  return w;
}

Weight& Weight::operator+=(const Weight& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (auto& c : w.coords_) c = -c;
  return w;
}

bool operator<(const Weight& a, const Weight& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool Weight::is_integral() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (!is_integer(coords_[i] - coords_[0])) return false;
  }
  return true;
}

bool Weight::has_integer_coords() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return is_integer(c); });
}

Rational Weight::coordinate_sum() const {
  Rational s;
  for (const auto& c : coords_) s += c;
  return s;
}

std::string Weight::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += pejm::to_string(coords_[i]);
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }

Weight parse_weight(std::string_view text) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    coords.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Weight(std::move(coords));
}

void require_rank(const Weight& w, std::size_t n, std::string_view what) {
  if (w.rank() != n) {
    throw InputError(std::string(what) + " has " + std::to_string(w.rank()) +
                     " coordinates, expected " + std::to_string(n));
  }
}

}  // namespace pejm
