#pragma once

#include <cstddef>
#include <vector>

#include "pejm/weight.hpp"

namespace pejm {

/// Root data of pe(n) in its standard matrix realization.
///
/// The even part is gl(n); g_1 carries the roots eps_i + eps_j (i <= j, B symmetric)
/// and g_{-1} the roots -(eps_i + eps_j) (i < j, C skew-symmetric). All root
/// lists are ordered lexicographically by their index pair (i, j).
class RankContext {
 public:
  std::size_t n() const { return n_; }
  const Weight& rho() const { return rho_; }
  const Weight& omega() const { return omega_; }
  const std::vector<Weight>& even_positive_roots() const { return even_positive_; }
  const std::vector<Weight>& simple_roots() const { return simple_; }
  const std::vector<Weight>& odd_roots_plus() const { return odd_plus_; }
  const std::vector<Weight>& odd_roots_minus() const { return odd_minus_; }

  // eps_i - eps_{i+1}, 1-based index i in 1..n-1.
  const Weight& simple_root(int index) const;

  friend RankContext make_context(std::size_t n);

 private:
  RankContext() = default;

  std::size_t n_ = 0;
  Weight rho_;
  Weight omega_;
  std::vector<Weight> even_positive_;
  std::vector<Weight> simple_;
  std::vector<Weight> odd_plus_;
  std::vector<Weight> odd_minus_;
};

RankContext make_context(std::size_t n);

// i*eps_1 + (i-1)*eps_2 + ... + eps_i, for 0 <= i <= n.
Weight distinguished_weight(const RankContext& ctx, int i);

}  // namespace pejm
