#include "pejm/kl.hpp"

#include <fstream>
#include <sstream>

#include "pejm/errors.hpp"
#include "pejm/weights.hpp"

namespace pejm {

KLPoly::KLPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void KLPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t KLPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

std::int64_t KLPoly::at_one() const {
  std::int64_t s = 0;
  for (auto c : coeffs_) s += c;
  return s;
}

KLPoly& KLPoly::operator+=(const KLPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

KLPoly& KLPoly::operator-=(const KLPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

KLPoly KLPoly::scaled(std::int64_t c, int k) const {
  if (c == 0 || coeffs_.empty()) return {};
  std::vector<std::int64_t> out(static_cast<std::size_t>(k), 0);
  for (auto v : coeffs_) out.push_back(c * v);
  return KLPoly(std::move(out));
}

std::string KLPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const std::int64_t a = c < 0 ? -c : c;
    if (k == 0) {
      out += std::to_string(a);
      continue;
    }
    if (a != 1) out += std::to_string(a);
    out += "q";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

KLCache& KLCache::global() {
  static KLCache cache;
  return cache;
}

KLCache::RankTable& KLCache::table_locked(std::size_t n) {
  if (n == 0 || n > kMaxRank) {
    throw UnsupportedError("Kazhdan-Lusztig tables are limited to 1 <= n <= " +
                           std::to_string(kMaxRank));
  }
  auto it = tables_.find(n);
  if (it != tables_.end() && !it->second.elems.empty()) return it->second;

  RankTable& t = tables_[n];
  t.n = n;
  t.elems = all_elements(n);
  const std::size_t count = t.elems.size();
  t.length.resize(count);
  // rank[w][i][k] = #{a <= i : w(a) >= k}; x <= y iff rank_x <= rank_y entrywise.
  std::vector<std::vector<int>> rank(count, std::vector<int>(n * n, 0));
  for (std::size_t e = 0; e < count; ++e) {
    const WeylElem& w = t.elems[e];
    t.index[w.code()] = static_cast<int>(e);
    t.length[e] = w.length();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        int r = 0;
        for (std::size_t a = 0; a <= i; ++a) r += static_cast<std::size_t>(w(a)) >= k ? 1 : 0;
        rank[e][i * n + k] = r;
      }
    }
  }
  t.leq.assign(count * count, 0);
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t y = 0; y < count; ++y) {
      bool le = t.length[x] <= t.length[y];
      for (std::size_t c = 0; le && c < n * n; ++c) le = rank[x][c] <= rank[y][c];
      t.leq[x * count + y] = le ? 1 : 0;
    }
  }
  return t;
}

const KLPoly& KLCache::compute_locked(RankTable& t, int x, int y) {
  static const KLPoly kZero;
  static const KLPoly kOne = KLPoly::one();
  if (!t.le(x, y)) return kZero;
  if (x == y) return kOne;
  const std::uint64_t key = static_cast<std::uint64_t>(x) * t.elems.size() + static_cast<std::uint64_t>(y);
  if (auto it = t.memo.find(key); it != t.memo.end()) return it->second;

  const WeylElem& ye = t.elems[static_cast<std::size_t>(y)];
  int s_index = 1;
  while (!ye.has_left_descent(s_index)) ++s_index;
  const WeylElem s = WeylElem::simple_reflection(t.n, s_index);
  const int v = t.idx(s * ye);
  const int sx = t.idx(s * t.elems[static_cast<std::size_t>(x)]);
  const int c = t.elems[static_cast<std::size_t>(x)].has_left_descent(s_index) ? 1 : 0;

  // P_{x,y} = q^{1-c} P_{sx,v} + q^c P_{x,v} - sum_z mu(z,v) q^{(l(y)-l(z))/2} P_{x,z},
  // z over x <= z < v with sz < z.
  KLPoly p = compute_locked(t, sx, v).scaled(1, 1 - c);
  p += compute_locked(t, x, v).scaled(1, c);
  const int lv = t.length[static_cast<std::size_t>(v)];
  const int ly = t.length[static_cast<std::size_t>(y)];
  for (std::size_t z = 0; z < t.elems.size(); ++z) {
    const int zi = static_cast<int>(z);
    if (zi == v || !t.le(x, zi) || !t.le(zi, v)) continue;
    const int gap = lv - t.length[z];
    if (gap % 2 == 0) continue;
    if (!t.elems[z].has_left_descent(s_index)) continue;
    const std::int64_t mu = compute_locked(t, zi, v).coeff((gap - 1) / 2);
    if (mu == 0) continue;
    p -= compute_locked(t, x, zi).scaled(mu, (ly - t.length[z]) / 2);
  }
  return t.memo.emplace(key, std::move(p)).first->second;
}

KLPoly KLCache::polynomial(const WeylElem& x, const WeylElem& y) {
  if (x.rank() != y.rank()) throw InputError("rank mismatch in Kazhdan-Lusztig polynomial");
  std::lock_guard lock(mu_);
  RankTable& t = table_locked(x.rank());
  return compute_locked(t, t.idx(x), t.idx(y));
}

bool KLCache::bruhat(const WeylElem& x, const WeylElem& y) {
  if (x.rank() != y.rank()) throw InputError("rank mismatch in Bruhat comparison");
  std::lock_guard lock(mu_);
  RankTable& t = table_locked(x.rank());
  return t.le(t.idx(x), t.idx(y));
}

std::size_t KLCache::entries() const {
  std::lock_guard lock(mu_);
  std::size_t total = 0;
  for (const auto& [n, t] : tables_) total += t.memo.size();
  return total;
}

void KLCache::clear() {
  std::lock_guard lock(mu_);
  tables_.clear();
}

void KLCache::save(const std::filesystem::path& path) const {
  std::lock_guard lock(mu_);
  std::ofstream out(path);
  if (!out) throw InputError("cannot write KL cache file " + path.string());
  out << "pejm-kl-cache " << kFormatVersion << "\n";
  for (const auto& [n, t] : tables_) {
    const std::size_t count = t.elems.size();
    for (const auto& [key, poly] : t.memo) {
      const auto& x = t.elems[key / count];
      const auto& y = t.elems[key % count];
      out << n;
      for (int v : x.images()) out << ' ' << v;
      for (int v : y.images()) out << ' ' << v;
      out << ' ' << poly.coeffs().size();
      for (auto c : poly.coeffs()) out << ' ' << c;
      out << '\n';
    }
  }
}

std::size_t KLCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read KL cache file " + path.string());
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != "pejm-kl-cache") {
    throw InputError("not a KL cache file: " + path.string());
  }
  if (version != kFormatVersion) {
    throw InputError("unsupported KL cache version " + std::to_string(version));
  }
  std::lock_guard lock(mu_);
  std::size_t loaded = 0;
  std::size_t n = 0;
  while (in >> n) {
    if (n == 0 || n > kMaxRank) throw InputError("bad rank in KL cache record");
    std::vector<int> xs(n), ys(n);
    for (auto& v : xs) in >> v;
    for (auto& v : ys) in >> v;
    std::size_t k = 0;
    in >> k;
    std::vector<std::int64_t> coeffs(k);
    for (auto& c : coeffs) in >> c;
    if (!in) throw InputError("truncated KL cache record");
    const WeylElem x = WeylElem::from_images(xs);
    const WeylElem y = WeylElem::from_images(ys);
    RankTable& t = table_locked(n);
    const int xi = t.idx(x);
    const int yi = t.idx(y);
    if (!t.le(xi, yi)) throw InputError("KL cache record for a non-comparable pair");
    const std::uint64_t key = static_cast<std::uint64_t>(xi) * t.elems.size() + static_cast<std::uint64_t>(yi);
    t.memo.insert_or_assign(key, KLPoly(std::move(coeffs)));
    ++loaded;
  }
  if (!in.eof()) throw InputError("malformed KL cache file " + path.string());
  return loaded;
}

KLPoly kl_polynomial(const WeylElem& x, const WeylElem& y) {
  return KLCache::global().polynomial(x, y);
}

void require_regular_antidominant(const RankContext& ctx, const Weight& base) {
  require_rank(base, ctx.n(), "base weight");
  if (!base.is_integral()) throw UnsupportedError("base weight " + base.to_string() + " is not integral");
  const Weight v = base + ctx.rho();
  for (std::size_t i = 0; i + 1 < ctx.n(); ++i) {
    if (!(v[i] < v[i + 1])) {
      throw UnsupportedError("base weight " + base.to_string() +
                             " is not regular antidominant (base + rho must increase strictly)");
    }
  }
}

GClass simple_in_verma(const RankContext& ctx, const Weight& base, const WeylElem& w) {
  require_regular_antidominant(ctx, base);
  if (w.rank() != ctx.n()) throw InputError("Weyl element rank does not match context");
  KLCache& cache = KLCache::global();
  GClass out(Basis::VermaG0, ctx.n());
  const int lw = w.length();
  for (const WeylElem& x : all_elements(ctx.n())) {
    if (!cache.bruhat(x, w)) continue;
    const std::int64_t sign = (lw - x.length()) % 2 == 0 ? 1 : -1;
    out.add(dot_action(ctx, x, base), sign * cache.polynomial(x, w).at_one());
  }
  return out;
}

GClass verma_in_simple(const RankContext& ctx, const Weight& base, const WeylElem& w) {
  require_regular_antidominant(ctx, base);
  if (w.rank() != ctx.n()) throw InputError("Weyl element rank does not match context");
  KLCache& cache = KLCache::global();
  const WeylElem w0 = longest_element(ctx.n());
  GClass out(Basis::SimpleG0, ctx.n());
  for (const WeylElem& x : all_elements(ctx.n())) {
    if (!cache.bruhat(x, w)) continue;
    out.add(dot_action(ctx, x, base), cache.polynomial(w0 * w, w0 * x).at_one());
  }
  return out;
}

}  // namespace pejm
