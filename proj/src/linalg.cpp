#include "cforge/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace cforge {

namespace {

void check_width(const ScalarMat& rows, size_t n, const char* who) {
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument(std::string(who) + ": ragged matrix");
}

bool is_zero_vec(const ScalarVec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

}  // namespace

ScalarVec SpanBuilder::reduce(ScalarVec v) const {
  if (v.size() != ambient_) throw std::invalid_argument("SpanBuilder: dimension mismatch");
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[pivots_[r]];
    if (c.is_zero()) continue;
    Scalar f = c;  // pivot entries are 1
    for (size_t j = pivots_[r]; j < ambient_; ++j) v[j] -= f * rows_[r][j];
  }
  return v;
}

bool SpanBuilder::add(ScalarVec v) {
  v = reduce(std::move(v));
  size_t p = 0;
  while (p < ambient_ && v[p].is_zero()) ++p;
  if (p == ambient_) return false;
  Scalar lead = v[p];
  for (size_t j = p; j < ambient_; ++j) v[j] = v[j] / lead;
  // Back-eliminate the new pivot column from existing rows.
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = rows_[r][p];
    if (c.is_zero()) continue;
    Scalar f = c;
    for (size_t j = p; j < ambient_; ++j) rows_[r][j] -= f * v[j];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  size_t at = static_cast<size_t>(pos - pivots_.begin());
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
  return true;
}

bool SpanBuilder::contains(const ScalarVec& v) const { return is_zero_vec(reduce(v)); }

ScalarMat row_reduce(ScalarMat rows) {
  if (rows.empty()) return {};
  size_t n = rows[0].size();
  check_width(rows, n, "row_reduce");
  SpanBuilder span(n);
  for (auto& r : rows) span.add(std::move(r));
  return span.basis();
}

std::optional<ScalarVec> solve_linear(const ScalarMat& rows, const ScalarVec& target) {
  size_t m = rows.size();
  size_t n = target.size();
  check_width(rows, n, "solve_linear");
  // Augmented transpose [A^T | t]: unknowns are the m row coefficients.
  ScalarMat aug(n, ScalarVec(m + 1));
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < m; ++i) aug[j][i] = rows[i][j];
    aug[j][m] = target[j];
  }
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < m && row < n; ++col) {
    size_t sel = row;
    while (sel < n && aug[sel][col].is_zero()) ++sel;
    if (sel == n) continue;
    std::swap(aug[row], aug[sel]);
    Scalar inv = inverse(aug[row][col]);
    for (size_t j = col; j <= m; ++j) aug[row][j] = aug[row][j] * inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == row) continue;
      const Scalar c = aug[r][col];
      if (c.is_zero()) continue;
      for (size_t j = col; j <= m; ++j) aug[r][j] -= c * aug[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (size_t r = row; r < n; ++r)
    if (!aug[r][m].is_zero()) return std::nullopt;  // 0 = nonzero
  ScalarVec sol(m, Scalar(0));
  for (size_t r = 0; r < pivot_col.size(); ++r) sol[pivot_col[r]] = aug[r][m];
  return sol;
}

ScalarMat nullspace(const ScalarMat& a) {
  if (a.empty()) return {};
  size_t n = a[0].size();
  check_width(a, n, "nullspace");
  ScalarMat rref = row_reduce(a);
  std::vector<size_t> pivots;
  std::vector<bool> is_pivot(n, false);
  for (const auto& r : rref) {
    size_t p = 0;
    while (p < n && r[p].is_zero()) ++p;
    pivots.push_back(p);
    is_pivot[p] = true;
  }
  ScalarMat basis;
  for (size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    ScalarVec x(n, Scalar(0));
    x[f] = Scalar(1);
    for (size_t r = 0; r < rref.size(); ++r) x[pivots[r]] = -rref[r][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace cforge
