#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "pejm/gclass.hpp"
#include "pejm/structure.hpp"
#include "pejm/weyl.hpp"

namespace pejm {

/// Integer polynomial in q, coefficients in ascending degree, no trailing zeros.
class KLPoly {
 public:
  KLPoly() = default;
  explicit KLPoly(std::vector<std::int64_t> coeffs);
  static KLPoly one() { return KLPoly({1}); }

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int k) const;
  std::int64_t at_one() const;

  KLPoly& operator+=(const KLPoly& other);
  KLPoly& operator-=(const KLPoly& other);
  friend KLPoly operator+(KLPoly a, const KLPoly& b) { return a += b; }
  friend KLPoly operator-(KLPoly a, const KLPoly& b) { return a -= b; }
  // Multiply by c * q^k.
  KLPoly scaled(std::int64_t c, int k) const;

  friend bool operator==(const KLPoly&, const KLPoly&) = default;

  // "1 + q + 2q^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// Memoized Kazhdan-Lusztig polynomials for S_n, shared by all callers.
///
/// A single mutex serializes access, so concurrent callers see one logical map.
/// Ranks above kMaxRank are rejected: the Bruhat tables are quadratic in n!.
class KLCache {
 public:
  static constexpr std::size_t kMaxRank = 7;
  static constexpr int kFormatVersion = 1;

  static KLCache& global();

  KLPoly polynomial(const WeylElem& x, const WeylElem& y);
  bool bruhat(const WeylElem& x, const WeylElem& y);

  std::size_t entries() const;
  void clear();

  // Text format: header line "pejm-kl-cache <version>", then one record per line:
  // n, the n images of x, the n images of y, coefficient count, coefficients.
  void save(const std::filesystem::path& path) const;
  // Returns the number of records loaded. Throws InputError on malformed files.
  std::size_t load(const std::filesystem::path& path);

 private:
  struct RankTable {
    std::size_t n = 0;
    std::vector<WeylElem> elems;
    std::vector<int> length;
    std::unordered_map<std::uint64_t, int> index;
    std::vector<std::uint8_t> leq;  // elems.size()^2, row = x, column = y
    std::unordered_map<std::uint64_t, KLPoly> memo;

    int idx(const WeylElem& w) const { return index.at(w.code()); }
    bool le(int x, int y) const { return leq[static_cast<std::size_t>(x) * elems.size() + y] != 0; }
  };

  RankTable& table_locked(std::size_t n);
  const KLPoly& compute_locked(RankTable& t, int x, int y);

  mutable std::mutex mu_;
  std::unordered_map<std::size_t, RankTable> tables_;
};

KLPoly kl_polynomial(const WeylElem& x, const WeylElem& y);

// Regular antidominant integral base point: entries of base + rho strictly increasing
// with integer differences. Throws UnsupportedError otherwise.
void require_regular_antidominant(const RankContext& ctx, const Weight& base);

// [L(w . base)] = sum_{x <= w} (-1)^{l(w)-l(x)} P_{x,w}(1) [M(x . base)]
GClass simple_in_verma(const RankContext& ctx, const Weight& base, const WeylElem& w);

// [M(w . base)] = sum_{x <= w} P_{w0 w, w0 x}(1) [L(x . base)], the inverse of the above.
GClass verma_in_simple(const RankContext& ctx, const Weight& base, const WeylElem& w);

}  // namespace pejm
