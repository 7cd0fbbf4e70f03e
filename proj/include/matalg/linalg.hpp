// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATALG_LINALG_HPP
#define MATALG_LINALG_HPP

#include <Eigen/Dense>

#include <vector>

#include "matalg/rational.hpp"

namespace matalg {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = DenseMatrix<Rational>;
using RatVector = DenseVector<Rational>;
using Index = Eigen::Index;

/// Incrementally maintained basis of a span of vectors, reduced so that each
/// stored vector has a unit leading entry at a distinct pivot position.
/// insert() appends and pop() removes the most recent vector, which makes
/// the class usable as a backtracking stack in subset enumerations.
class SpanBasis {
 public:
  explicit SpanBasis(Index ambient_dim) : dim_(ambient_dim) {}

  Index ambient_dim() const { return dim_; }
  Index size() const { return static_cast<Index>(rows_.size()); }

  /// Residual of v after eliminating against the stored vectors.
  RatVector reduce(RatVector v) const;

  bool contains(const RatVector& v) const;

  /// Adds v to the span.  Returns true when the dimension grew.
  bool insert(const RatVector& v);

  /// Undoes the most recent successful insert.
  void pop();

  /// Stored (reduced, unit-pivot) basis vector.
  const RatVector& row(Index k) const { return rows_[static_cast<std::size_t>(k)]; }

 private:
  Index dim_;
  std::vector<RatVector> rows_;
  std::vector<Index> pivots_;
};

bool is_zero_vector(const RatVector& v);
bool exactly_equal(const RatMatrix& a, const RatMatrix& b);

/// Exact rank by rational Gaussian elimination (first nonzero pivot in
/// column order; pivot choice is a pure performance matter over Q).
Index rank_of(const RatMatrix& m);

/// Dimension of the linear span of a list of equal-length vectors.
Index span_dim(const std::vector<RatVector>& vectors);

/// Basis of the right null space { v : m v = 0 }.  Empty when rank = cols.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws std::invalid_argument on non-square input.
Rational determinant(const RatMatrix& m);

/// Exact inverse; throws std::invalid_argument when singular or non-square.
RatMatrix inverse(const RatMatrix& m);

struct PivotForm {
  RatMatrix reduced;               // reduced row echelon form
  std::vector<Index> pivot_cols;   // one per nonzero row, increasing
};

/// Reduced row echelon form with pivot bookkeeping.
PivotForm reduced_row_echelon(RatMatrix m);

/// Basis of the row space as the nonzero rows of the RREF (r x cols).
RatMatrix rowspace_basis(const RatMatrix& m);

struct StandardForm {
  RatMatrix full;              // d x m, equal to [I N] after column permutation
  RatMatrix n_block;           // d x (m-d)
  std::vector<Index> col_perm; // col_perm[k] = original index of permuted column k
};

/// Row-reduces a full-row-rank matrix and permutes pivot columns to the
/// front, yielding the chart form [I N].
StandardForm standard_form(const RatMatrix& m);

}  // namespace matalg

#endif  // MATALG_LINALG_HPP
