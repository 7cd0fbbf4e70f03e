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

#ifndef MATALG_EQUIV_HPP
#define MATALG_EQUIV_HPP

#include <optional>
#include <vector>

#include "matalg/matroid.hpp"

namespace matalg {

/// A column direction in projective space: scaled so the first nonzero
/// coordinate is 1, with the number of columns on that line.
struct ProjectiveColumn {
  RatVector direction;
  int multiplicity = 0;
};

/// Canonical multiset of the column lines, sorted lexicographically by
/// direction entries.  Two representations have equal line multisets if and
/// only if they differ by a monomial matrix on the right.
std::vector<ProjectiveColumn> line_multiset(const RepMatrix& m);

bool same_line_multiset(const std::vector<ProjectiveColumn>& a,
                        const std::vector<ProjectiveColumn>& b);

/// Witness of linear equivalence Q M P = N with Q invertible and P a
/// monomial matrix, stored as a permutation with one scale per source
/// column: column perm[c] of M P equals scale[c] * (column c of M).
struct EquivalenceWitness {
  RatMatrix q;
  std::vector<Index> perm;
  std::vector<Rational> scale;

  RatMatrix p_matrix() const;
  bool verify(const RepMatrix& m, const RepMatrix& n) const;
};

/// Decides whether Q M P = N is solvable and produces a verified witness.
///
/// Search: fix the lexicographically earliest column basis of M.  For every
/// ordered independent d-tuple of N's columns as the image lines of that
/// basis, the remaining freedom in Q is a diagonal scaling in the basis
/// coordinates; each further column assignment pins down ratios between the
/// diagonal entries, so a backtracking match over the column bijection with
/// exact ratio bookkeeping either finds a consistent scaling or exhausts
/// the tuple.  Complete because any witness maps the basis lines onto some
/// independent tuple of N-lines, after which its Q is of exactly this
/// diagonal-scaled form.
std::optional<EquivalenceWitness> linearly_equivalent(const RepMatrix& m, const RepMatrix& n);

struct IsomorphismResult {
  bool isomorphic = false;
  std::optional<EquivalenceWitness> witness;
};

/// A(M) and A(N) are isomorphic as algebras precisely when the
/// representations are linearly equivalent; the witness's monomial matrix
/// also extends the isomorphism to an automorphism of the ambient B.
IsomorphismResult algebras_isomorphic(const RepMatrix& m, const RepMatrix& n);

}  // namespace matalg

#endif  // MATALG_EQUIV_HPP
