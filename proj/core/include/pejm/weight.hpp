#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pejm/rational.hpp"

namespace pejm {

/// Element of h* written in the epsilon basis, with exact rational coordinates.
///
/// Coordinates are 0-based in code; epsilon(n, i) is the i-th (0-based) unit vector.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Weight zero(std::size_t n) { return Weight(std::vector<Rational>(n)); }
  static Weight epsilon(std::size_t n, std::size_t i);
  static Weight constant(std::size_t n, const Rational& value) {
    return Weight(std::vector<Rational>(n, value));
  }

  std::size_t rank() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(const Rational& scalar);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
  Weight operator-() const;

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
  // Lexicographic; used only to give maps a deterministic order.
  friend bool operator<(const Weight& a, const Weight& b);

  bool is_zero() const;
  // All pairwise coordinate differences are integers.
  bool is_integral() const;
  bool has_integer_coords() const;
  Rational coordinate_sum() const;

  // "(a,b,c)"
  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

// Parses a comma-separated list of rational literals, e.g. "0,2" or "-1/2,3/2".
Weight parse_weight(std::string_view text);

// Throws InputError unless both weights have the expected rank.
void require_rank(const Weight& w, std::size_t n, std::string_view what);

}  // namespace pejm
