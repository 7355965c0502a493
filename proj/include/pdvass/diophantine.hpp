#pragma once

// Minimal non-negative solutions of linear Diophantine systems, by the
// completion procedure of Contejean and Devie.

#include <vector>

#include "pdvass/common.hpp"

namespace pdvass::dio {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  /// Throws PreconditionError on ragged input. `cols` is used when rows is empty.
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols = 0);
  static Matrix from_columns(const std::vector<Vec>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Vec column(std::size_t j) const;
  Vec apply(const Vec& z) const;
  /// The largest 1-norm of a column.
  Int column_norm() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

struct SolutionBasis {
  std::vector<Vec> minimals;     // sorted
  std::vector<Vec> homogeneous;  // sorted
};

/// (1 + column_norm(A))^rows, saturating at INT64_MAX.
Int pottier_bound(const Matrix& a);

/// Minimal nonzero z >= 0 with Az = 0 (in `minimals`). Throws Error if an
/// output exceeds pottier_bound in max-norm.
SolutionBasis hilbert_homogeneous(const Matrix& a);

struct InhomogeneousOptions {
  /// Stop after the first inhomogeneous solution (feasibility only).
  bool stopAtFirst = false;
};

/// Minimal z >= 0 with Az = b, plus the homogeneous basis of A: every
/// solution is a minimal plus a sum of homogeneous vectors.
SolutionBasis minimal_inhomogeneous(const Matrix& a, const Vec& b, const InhomogeneousOptions& options = {});

bool feasible(const Matrix& a, const Vec& b);

/// Az >= b through slack columns; both lists are projected back to z, and
/// `minimals` is reduced to its minimal elements.
SolutionBasis minimal_inequality(const Matrix& a, const Vec& b);

/// Keeps the <=-minimal vectors (componentwise), sorted and deduplicated.
std::vector<Vec> minimal_elements(std::vector<Vec> vs);

}  // namespace pdvass::dio
