#pragma once

// Dense exact linear algebra over a Field.

#include <optional>
#include <vector>

#include "cartierlab/field.hpp"

namespace cartierlab {

using Vec = std::vector<Scalar>;
using Matrix = std::vector<Vec>;  // row-major

struct Echelon {
  Matrix rows;                     // reduced row echelon form, nonzero rows only
  std::vector<std::size_t> pivots; // pivot column of each row
};

Vec zero_vec(const Field& k, std::size_t n);
bool is_zero_vec(const Field& k, const Vec& v);
Vec add_vec(const Field& k, const Vec& a, const Vec& b);
Vec sub_vec(const Field& k, const Vec& a, const Vec& b);
Vec scale_vec(const Field& k, const Vec& a, const Scalar& c);
bool equal_vec(const Field& k, const Vec& a, const Vec& b);

Echelon row_reduce(const Field& k, Matrix m, std::size_t cols);
std::size_t rank(const Field& k, const Matrix& m, std::size_t cols);
/// Basis of {x : m x = 0}.
std::vector<Vec> kernel(const Field& k, const Matrix& m, std::size_t cols);
/// Some x with m x = b.
std::optional<Vec> solve(const Field& k, const Matrix& m, const Vec& b, std::size_t cols);

/// Incremental echelon basis of a subspace, used for "is v in the span of
/// what we have seen" queries while keeping track of the combination.
class SpanTracker {
 public:
  SpanTracker(Field k, std::size_t dim);
  /// Reduces v against the stored rows.  Returns the coordinates of v in
  /// terms of inserted vectors when v lies in the span.
  std::optional<Vec> express(const Vec& v) const;
  /// Inserts v; returns false when v was already in the span.
  bool insert(const Vec& v);
  std::size_t size() const { return inserted_; }

 private:
  Field k_;
  std::size_t dim_;
  std::size_t inserted_ = 0;
  std::vector<Vec> rows_;     // echelon rows, pivot normalized to 1
  std::vector<Vec> combos_;   // row i = sum combos_[i][j] * inserted_j
  std::vector<std::size_t> pivots_;
};

}  // namespace cartierlab
