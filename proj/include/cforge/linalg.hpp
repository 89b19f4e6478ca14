#ifndef CFORGE_LINALG_HPP
#define CFORGE_LINALG_HPP

#include <optional>
#include <vector>

#include "cforge/scalar.hpp"

namespace cforge {

using ScalarVec = std::vector<Scalar>;
using ScalarMat = std::vector<ScalarVec>;

/// Reduced row echelon basis of the row span; zero rows dropped.
/// Idempotent and span-preserving. All rows must share one length.
ScalarMat row_reduce(ScalarMat rows);

/// Coefficients c with sum_i c_i * rows[i] == target, if any.
std::optional<ScalarVec> solve_linear(const ScalarMat& rows, const ScalarVec& target);

/// Basis of { x : A x == 0 } for an m x n matrix A.
ScalarMat nullspace(const ScalarMat& a);

/// Incremental exact span: rows kept in reduced echelon form.
class SpanBuilder {
public:
  explicit SpanBuilder(size_t ambient) : ambient_(ambient) {}

  /// Residual of v after elimination against the current basis.
  ScalarVec reduce(ScalarVec v) const;
  /// Inserts v's residual if nonzero; returns whether the span grew.
  bool add(ScalarVec v);
  bool contains(const ScalarVec& v) const;

  const ScalarMat& basis() const { return rows_; }
  size_t dim() const { return rows_.size(); }
  size_t ambient() const { return ambient_; }

private:
  size_t ambient_;
  ScalarMat rows_;              // RREF, sorted by pivot column
  std::vector<size_t> pivots_;  // pivot column of each row
};

}  // namespace cforge

#endif
