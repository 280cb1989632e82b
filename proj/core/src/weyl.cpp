#include "pejm/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "pejm/errors.hpp"

namespace pejm {

WeylElem WeylElem::identity(std::size_t n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  return WeylElem(std::move(perm));
}

WeylElem WeylElem::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (auto& v : images) {
    if (v < 1 || static_cast<std::size_t>(v) > images.size() || seen[static_cast<std::size_t>(v - 1)]) {
      throw InputError("image list is not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
    --v;
  }
  return WeylElem(std::move(images));
}

WeylElem WeylElem::simple_reflection(std::size_t n, int i) {
  if (i < 1 || static_cast<std::size_t>(i) >= n) {
    throw InputError("simple reflection index " + std::to_string(i) + " out of range for n=" +
                     std::to_string(n));
  }
  WeylElem s = identity(n);
  std::swap(s.perm_[static_cast<std::size_t>(i - 1)], s.perm_[static_cast<std::size_t>(i)]);
  return s;
}

std::vector<int> WeylElem::images() const {
  std::vector<int> out(perm_);
  for (auto& v : out) ++v;
  return out;
}

int WeylElem::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    for (std::size_t j = i + 1; j < perm_.size(); ++j) {
      if (perm_[i] > perm_[j]) ++inv;
    }
  }
  return inv;
}

bool WeylElem::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

WeylElem WeylElem::inverse() const {
  std::vector<int> inv(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) inv[static_cast<std::size_t>(perm_[i])] = static_cast<int>(i);
  return WeylElem(std::move(inv));
}

WeylElem operator*(const WeylElem& x, const WeylElem& y) {
  if (x.rank() != y.rank()) throw InputError("rank mismatch in Weyl group product");
  std::vector<int> out(x.rank());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = x.perm_[static_cast<std::size_t>(y.perm_[k])];
  return WeylElem(std::move(out));
}

bool WeylElem::has_left_descent(int i) const {
  // s_i w < w iff i+1 appears before i in the image list
  const auto pos_i = std::find(perm_.begin(), perm_.end(), i - 1);
  const auto pos_next = std::find(perm_.begin(), perm_.end(), i);
  return pos_next < pos_i;
}

bool WeylElem::has_right_descent(int i) const {
  return perm_[static_cast<std::size_t>(i - 1)] > perm_[static_cast<std::size_t>(i)];
}

std::vector<int> WeylElem::reduced_word() const {
  std::vector<int> word;
  WeylElem w = *this;
  const int n = static_cast<int>(rank());
  while (!w.is_identity()) {
    for (int i = 1; i < n; ++i) {
      if (w.has_left_descent(i)) {
        word.push_back(i);
        w = simple_reflection(rank(), i) * w;
        break;
      }
    }
  }
  return word;
}

std::uint64_t WeylElem::code() const {
  std::uint64_t c = 0;
  for (int v : perm_) c = (c << 4) | static_cast<std::uint64_t>(v);
  return c;
}

std::string WeylElem::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(perm_[i] + 1);
  }
  return out + "]";
}

WeylElem from_reduced_word(std::size_t n, std::span<const int> word) {
  WeylElem w = WeylElem::identity(n);
  for (int i : word) w = w * WeylElem::simple_reflection(n, i);
  return w;
}

bool bruhat_leq(const WeylElem& x, const WeylElem& y) {
  if (x.rank() != y.rank()) throw InputError("rank mismatch in Bruhat comparison");
  // Walk the reduced word y = s_{i1} s_{i2} ...: with s = s_{i1} (a left descent of y),
  // x <= y iff sx <= sy when sx < x, and iff x <= sy otherwise.
  WeylElem a = x;
  WeylElem b = y;
  const std::vector<int> word = y.reduced_word();
  if (a.length() > b.length()) return false;
  for (int i : word) {
    const WeylElem s = WeylElem::simple_reflection(x.rank(), i);
    if (a.has_left_descent(i)) a = s * a;
    b = s * b;
    if (a.length() > b.length()) return false;
  }
  return a.is_identity();
}

WeylElem longest_element(std::size_t n) {
  if (n == 0) throw InputError("rank must be positive");
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<int>(n - i);
  return WeylElem::from_images(std::move(images));
}

std::vector<WeylElem> all_elements(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<WeylElem> out;
  do {
    out.push_back(WeylElem::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<int> parse_word(std::string_view text) {
  std::vector<int> word;
  std::size_t start = 0;
  while (start < text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const auto piece = text.substr(start, comma - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) {
      throw InputError("malformed reduced word '" + std::string(text) + "'");
    }
    word.push_back(value);
    start = comma + 1;
  }
  return word;
}

}  // namespace pejm
