#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pejm/weight.hpp"

namespace pejm::testing {

inline Weight int_weight(std::initializer_list<std::int64_t> xs) {
  std::vector<Rational> c;
  for (auto x : xs) c.emplace_back(x);
  return Weight(std::move(c));
}

inline Weight random_int_weight(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<Rational> c;
  for (std::size_t i = 0; i < n; ++i) c.emplace_back(d(rng));
  return Weight(std::move(c));
}

inline std::vector<std::int64_t> int_coords(const Weight& w) {
  std::vector<std::int64_t> out;
  for (const auto& c : w.coords()) out.push_back(c.numerator() / c.denominator());
  return out;
}

}  // namespace pejm::testing
