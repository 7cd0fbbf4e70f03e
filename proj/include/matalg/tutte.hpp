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

#ifndef MATALG_TUTTE_HPP
#define MATALG_TUTTE_HPP

#include "matalg/matroid.hpp"
#include "matalg/poly.hpp"

namespace matalg {

/// Poincare polynomial by the deletion/contraction recursion
///   P(M) = t P(M \ j) + P(M / j)
/// on the highest-index column, with P = 1 for d = 0 and
/// P = 1 + t + ... + t^m for d = 1.  When deleting the chosen column would
/// drop the rank (a coloop), the subset rank expansion is used for that
/// subproblem so every intermediate matrix keeps full row rank.
UniPoly poincare_delcon(const RepMatrix& m);

/// Tutte polynomial via the subset rank expansion
///   T(x, y) = sum over S of (x-1)^(d - r(S)) (y-1)^(|S| - r(S)).
BiPoly tutte_rank_expansion(const RepMatrix& m);

/// t^(m-d) T(1 + t, 1/t); asserts that no negative powers of t survive.
UniPoly poincare_from_tutte(const RepMatrix& m);

/// Hilbert function by external activity: independent sets bucketed by
/// degree m - |S| - ea(S).
UniPoly hilbert_via_activity(const RepMatrix& m);

/// Poincare polynomial of the algebra generated by the row space of an
/// arbitrary matrix: reduces to a full-row-rank representation (stripping
/// zero columns) and recurses.  Handles the lower-rank matrices produced by
/// deleting a coloop column.
UniPoly poincare_of_rowspace(const RatMatrix& raw);

struct DelConReport {
  bool holds = true;
  Index failed_column = -1;
};

/// Verifies P(M) = t P(M \ j) + P(M / j) for every column j.
DelConReport delcon_identity_check(const RepMatrix& m);

}  // namespace matalg

#endif  // MATALG_TUTTE_HPP
