#include "cartierlab/linalg.hpp"

#include "cartierlab/errors.hpp"

namespace cartierlab {

Vec zero_vec(const Field& k, std::size_t n) { return Vec(n, k.zero()); }

bool is_zero_vec(const Field& k, const Vec& v) {
  for (const auto& c : v)
    if (!k.is_zero(c)) return false;
  return true;
}

Vec add_vec(const Field& k, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k.add(a[i], b[i]);
  return r;
}

Vec sub_vec(const Field& k, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k.sub(a[i], b[i]);
  return r;
}

Vec scale_vec(const Field& k, const Vec& a, const Scalar& c) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k.mul(a[i], c);
  return r;
}

bool equal_vec(const Field& k, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!k.equal(a[i], b[i])) return false;
  return true;
}

Echelon row_reduce(const Field& k, Matrix m, std::size_t cols) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && k.is_zero(m[piv][c])) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    Scalar inv = k.inv(m[r][c]);
    for (auto& x : m[r]) x = k.mul(x, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || k.is_zero(m[i][c])) continue;
      Scalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = k.sub(m[i][j], k.mul(f, m[r][j]));
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const Field& k, const Matrix& m, std::size_t cols) { return row_reduce(k, m, cols).pivots.size(); }

std::vector<Vec> kernel(const Field& k, const Matrix& m, std::size_t cols) {
  Echelon e = row_reduce(k, m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(k, cols);
    v[free] = k.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = k.neg(e.rows[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const Field& k, const Matrix& m, const Vec& b, std::size_t cols) {
  Matrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Echelon e = row_reduce(k, aug, cols + 1);
  Vec x = zero_vec(k, cols);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == cols) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][cols];
  }
  return x;
}

SpanTracker::SpanTracker(Field k, std::size_t dim) : k_(std::move(k)), dim_(dim) {}

std::optional<Vec> SpanTracker::express(const Vec& v) const {
  Vec w = v;
  Vec combo = zero_vec(k_, inserted_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& c = w[pivots_[i]];
    if (k_.is_zero(c)) continue;
    Scalar f = c;
    for (std::size_t j = 0; j < dim_; ++j) w[j] = k_.sub(w[j], k_.mul(f, rows_[i][j]));
    for (std::size_t j = 0; j < inserted_; ++j) combo[j] = k_.add(combo[j], k_.mul(f, combos_[i][j]));
  }
  if (!is_zero_vec(k_, w)) return std::nullopt;
  return combo;
}

bool SpanTracker::insert(const Vec& v) {
  if (v.size() != dim_) throw InternalError("SpanTracker: dimension mismatch");
  Vec w = v;
  Vec combo = zero_vec(k_, inserted_ + 1);
  combo[inserted_] = k_.one();
  for (auto& c : combos_) c.push_back(k_.zero());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = w[pivots_[i]];
    if (k_.is_zero(c)) continue;
    for (std::size_t j = 0; j < dim_; ++j) w[j] = k_.sub(w[j], k_.mul(c, rows_[i][j]));
    for (std::size_t j = 0; j <= inserted_; ++j) combo[j] = k_.sub(combo[j], k_.mul(c, combos_[i][j]));
  }
  ++inserted_;
  std::size_t piv = 0;
  while (piv < dim_ && k_.is_zero(w[piv])) ++piv;
  if (piv == dim_) return false;
  Scalar inv = k_.inv(w[piv]);
  w = scale_vec(k_, w, inv);
  combo = scale_vec(k_, combo, inv);
  rows_.push_back(std::move(w));
  combos_.push_back(std::move(combo));
  pivots_.push_back(piv);
  return true;
}

}  // namespace cartierlab
