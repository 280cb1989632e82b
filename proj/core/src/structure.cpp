#include "pejm/structure.hpp"

#include "pejm/errors.hpp"

namespace pejm {

RankContext make_context(std::size_t n) {
  if (n == 0) throw InputError("rank must be positive");
  RankContext ctx;
  ctx.n_ = n;
  ctx.rho_ = Weight::zero(n);
  for (std::size_t i = 0; i < n; ++i) ctx.rho_[i] = static_cast<std::int64_t>(n - 1 - i);
  ctx.omega_ = Weight::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Weight sum = Weight::epsilon(n, i) + Weight::epsilon(n, j);
      ctx.odd_plus_.push_back(sum);
      if (i != j) {
        ctx.even_positive_.push_back(Weight::epsilon(n, i) - Weight::epsilon(n, j));
        ctx.odd_minus_.push_back(-sum);
      }
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    ctx.simple_.push_back(Weight::epsilon(n, i) - Weight::epsilon(n, i + 1));
  }
  return ctx;
}

const Weight& RankContext::simple_root(int index) const {
  if (index < 1 || static_cast<std::size_t>(index) >= n_) {
    throw InputError("simple root index " + std::to_string(index) + " out of range 1.." +
                     std::to_string(static_cast<long>(n_) - 1));
  }
  return simple_[static_cast<std::size_t>(index - 1)];
}

Weight distinguished_weight(const RankContext& ctx, int i) {
  if (i < 0 || static_cast<std::size_t>(i) > ctx.n()) {
    throw InputError("distinguished weight index " + std::to_string(i) + " out of range 0.." +
                     std::to_string(ctx.n()));
  }
  Weight w = Weight::zero(ctx.n());
  for (int k = 0; k < i; ++k) w[static_cast<std::size_t>(k)] = i - k;
  return w;
}

}  // namespace pejm
