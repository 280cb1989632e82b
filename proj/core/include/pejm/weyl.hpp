#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace pejm {

/// Element of the symmetric group S_n, stored as its image list.
///
/// images()[k-1] = w(k) for k in 1..n. Composition is as functions:
/// (x * y)(k) = x(y(k)). The simple reflection s_i swaps i and i+1.
class WeylElem {
 public:
  WeylElem() = default;

  static WeylElem identity(std::size_t n);
  // 1-based image list; throws InputError unless it is a permutation of 1..n.
  static WeylElem from_images(std::vector<int> images);
  static WeylElem simple_reflection(std::size_t n, int i);

  std::size_t rank() const { return perm_.size(); }
  // 0-based image of a 0-based point.
  int operator()(std::size_t k) const { return perm_[k]; }
  std::vector<int> images() const;

  int length() const;
  bool is_identity() const;
  WeylElem inverse() const;
  friend WeylElem operator*(const WeylElem& x, const WeylElem& y);

  // s_i w < w
  bool has_left_descent(int i) const;
  // w s_i < w
  bool has_right_descent(int i) const;

  // Lexicographically first reduced word, built by stripping left descents.
  std::vector<int> reduced_word() const;

  // Base-16 packing of the images; injective for n <= 16.
  std::uint64_t code() const;

  std::string to_string() const;

  friend bool operator==(const WeylElem&, const WeylElem&) = default;
  friend bool operator<(const WeylElem& a, const WeylElem& b) { return a.perm_ < b.perm_; }

 private:
  explicit WeylElem(std::vector<int> perm) : perm_(std::move(perm)) {}
  std::vector<int> perm_;
};

// s_{i_1} s_{i_2} ... s_{i_k}; indices are 1-based in 1..n-1.
WeylElem from_reduced_word(std::size_t n, std::span<const int> word);

// Bruhat order via the subword property against the reduced word of y.
bool bruhat_leq(const WeylElem& x, const WeylElem& y);

WeylElem longest_element(std::size_t n);

// All n! elements in lexicographic order of image lists.
std::vector<WeylElem> all_elements(std::size_t n);

std::vector<int> parse_word(std::string_view text);

}  // namespace pejm

template <>
struct std::hash<pejm::WeylElem> {
  std::size_t operator()(const pejm::WeylElem& w) const noexcept {
    return std::hash<std::uint64_t>{}(w.code() ^ (std::uint64_t{w.rank()} << 60));
  }
};
