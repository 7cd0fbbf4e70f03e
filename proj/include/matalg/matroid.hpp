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

#ifndef MATALG_MATROID_HPP
#define MATALG_MATROID_HPP

#include <cstdint>
#include <vector>

#include "matalg/linalg.hpp"

namespace matalg {

/// Subsets of the column ground set as bitmasks (column k <-> bit k).
using Mask = std::uint32_t;

constexpr int kMaxGroundSize = 30;

inline int popcount(Mask m) { return __builtin_popcount(m); }
inline Mask full_mask(int m) { return m == 0 ? 0u : ((Mask{1} << m) - 1u); }
inline bool mask_contains(Mask s, int j) { return (s >> j) & 1u; }

/// All masks over [m] with exactly k bits, ascending numerically.
std::vector<Mask> subsets_of_size(int m, int k);

/// Position of a mask within subsets_of_size(m, popcount(mask)), i.e. the
/// colex rank: sum of binomial(b_i, i+1) over the set bits b_0 < b_1 < ...
Index colex_rank(Mask mask);

/// A rank-d representation: d x m rational matrix of full row rank with no
/// zero columns.  Zero columns are stripped at construction (they do not
/// change the generated algebra); the count is recorded.
class RepMatrix {
 public:
  /// Strips zero columns, then requires rank == rows.
  /// Throws std::invalid_argument when the rank condition fails.
  explicit RepMatrix(const RatMatrix& m);

  /// Accepts any matrix: reduces to a row-space basis (making the row count
  /// equal the rank), then strips zero columns.  Never throws.
  static RepMatrix from_rowspace(const RatMatrix& m);

  Index dim() const { return mat_.rows(); }          // d
  Index ground_size() const { return mat_.cols(); }  // m
  const RatMatrix& matrix() const { return mat_; }
  RatVector column(Index j) const { return mat_.col(j); }
  int stripped_zero_columns() const { return stripped_; }

 private:
  RepMatrix() = default;
  RatMatrix mat_;
  int stripped_ = 0;
};

RatMatrix strip_zero_columns(const RatMatrix& m, int* stripped = nullptr);

/// Submatrix of the columns in the subset (relative order kept).
RatMatrix columns_of(const RatMatrix& m, Mask subset);

Index rank_subset(const RepMatrix& m, Mask subset);
bool is_independent(const RepMatrix& m, Mask subset);

/// All columns lying in the span of the subset's columns.
Mask closure(const RepMatrix& m, Mask subset);

/// Lexicographically earliest basis of span(S) among the elements of S,
/// i.e. the greedy scan over S in increasing column order.
Mask lex_earliest_basis(const RepMatrix& m, Mask subset);

/// Columns j in closure(S) \ S with lex_earliest_basis(S + j) equal to
/// lex_earliest_basis(S).
Mask externally_active_set(const RepMatrix& m, Mask subset);
int external_activity(const RepMatrix& m, Mask subset);

/// All independent subsets of the ground set.
std::vector<Mask> independent_sets(const RepMatrix& m);

/// All flats (closures of independent sets), deduplicated, ascending masks.
std::vector<Mask> flats(const RepMatrix& m);

/// Partition of the ground set into classes of mutually proportional
/// columns, each class a mask, ordered by smallest member.
std::vector<Mask> parallel_classes(const RepMatrix& m);

/// Deletes column j; throws std::invalid_argument when the result loses
/// full row rank (j is a coloop).
RepMatrix delete_column(const RepMatrix& m, Index j);

/// Contraction by a nonzero column: pivot on the greatest row index with a
/// nonzero entry in column j, clear that row by column operations, then
/// drop the pivot row and column j.  Zero columns created along the way are
/// stripped by the RepMatrix constructor.
RepMatrix contract_column(const RepMatrix& m, Index j);

/// Same operations on the raw matrix, no rank repair and no stripping.
RatMatrix raw_delete(const RatMatrix& m, Index j);
RatMatrix raw_contract(const RatMatrix& m, Index j);

/// Every d columns independent (checked by brute force over d-subsets).
bool is_uniform(const RepMatrix& m);

/// Cross-check for is_uniform: in the chart form [I N], non-uniform is
/// equivalent to a vanishing h x h minor of N for some h <= min(d, m-d).
bool has_vanishing_minor(const RepMatrix& m);

}  // namespace matalg

#endif  // MATALG_MATROID_HPP
