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

#ifndef MATALG_ANALYSIS_HPP
#define MATALG_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "matalg/algebra.hpp"
#include "matalg/laurent.hpp"
#include "matalg/matroid.hpp"
#include "matalg/poly.hpp"

namespace matalg {

/// Greedy binomial decomposition a = C(a_j, j) + ... + C(a_i, i) with
/// a_j > a_{j-1} > ... > a_i >= i > 0; unique for a >= 1, j >= 1.
struct BinomialDecomposition {
  long long a = 0;
  int j = 0;
  std::vector<std::pair<long long, int>> parts;  // (a_t, t), t descending
};

BinomialDecomposition macaulay_decomposition(long long a, int j);

/// The Macaulay pseudopower: shift every part of the decomposition up by
/// one in both arguments and re-sum.
Integer pseudopower(long long a, int j);

struct BoundCheck {
  bool ok = true;
  int first_violation = -1;
  std::string reason;
};

/// d_0 = 1, d_1 = d, d_m = 1 and 0 < d_{j+1} <= pseudopower_j(d_j).
BoundCheck macaulay_check(const UniPoly& hilbert, int d);

/// d_0 <= d_1 <= ... <= d_{floor(m/2)} and d_j <= d_{m-j} for 2j <= m.
BoundCheck growth_check(const UniPoly& hilbert);

/// d_j^2 >= d_{j-1} d_{j+1} at every interior index.
BoundCheck log_concavity_check(const UniPoly& hilbert);

/// Nonincreasing first differences d_j - d_{j-1} (implies log-concavity).
BoundCheck concave_differences_check(const UniPoly& hilbert);

/// min{ C(d+j-1, j), C(m, j) } for 0 <= j <= m.
UniPoly uniform_hilbert(int d, int m);

struct WilsonResult {
  Integer det_abs;
  Integer formula;
  bool match = false;
};

/// Determinant of the squarefree inclusion matrix (rows: degree m-j
/// supports, columns: degree j supports, 1 on divisibility) against the
/// product formula, compared in absolute value.  Requires 2j <= m.
WilsonResult wilson_det_check(int m, int j);

struct Sl2Triple {
  DenseMatrix<LaurentPoly> x, y, h;
  bool h_constant_diagonal = false;  // H diagonal, u-free, n-1, n-3, ..., -(n-1)
  bool commutator_x = false;         // HX - XH = 2X as Laurent identity
  bool commutator_y = false;         // HY - YH = -2Y
  bool window_invariant = false;     // negative powers avoid the middle-r window
  bool restriction_ok = false;       // u = 0 restriction satisfies the same relations
  bool all_ok() const {
    return h_constant_diagonal && commutator_x && commutator_y && window_invariant &&
           restriction_ok;
  }
};

/// Degenerations of the n-dimensional irreducible sl2 representation with
/// parameter u; requires 1 <= r <= n with n = r (mod 2).
Sl2Triple sl2_degeneration(int n, int r);

enum class UniformityMode { kAny, kUniformOnly, kNonUniformOnly };

/// Seeded random d x m representation: integer entries in
/// [-entry_bound, entry_bound], rejection-sampled until full rank, no zero
/// columns, and the requested uniformity.  Throws std::runtime_error when
/// rejection exceeds its attempt budget.
RepMatrix random_rep(int d, int m, std::uint64_t seed, int entry_bound = 5,
                     UniformityMode mode = UniformityMode::kAny);

struct ScanProfile {
  std::vector<int> dims = {2, 3};
  int m_min = 4;
  int m_max = 8;
  int entry_bound = 5;
};

struct ScanInstance {
  int index = 0;
  int d = 0;
  int m = 0;
  std::string matrix_hash;
  std::vector<long long> hilbert;
  bool log_concave = true;
  std::string violating_matrix;  // full matrix text, only when a check failed
};

struct ScanViolation {
  int index = 0;
  std::string kind;
  std::string matrix;
};

struct ScanReport {
  std::uint64_t seed = 0;
  int count = 0;
  ScanProfile profile;
  std::vector<ScanInstance> instances;
  std::vector<ScanViolation> violations;
  double elapsed_seconds = 0.0;
};

/// Random scan for log-concavity of Hilbert functions.  Per-instance seeds
/// are derived as seed xor index so the report does not depend on the
/// thread count.  Cross-checks hilbert_direct against poincare_delcon and
/// throws std::logic_error on any mismatch; Macaulay/growth failures (which
/// would contradict theorems) also abort.  Log-concavity violations are
/// recorded as data.
ScanReport scan_log_concavity(int count, const ScanProfile& profile, std::uint64_t seed,
                              int threads = 1);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The full single-instance battery used by the check command: Hilbert
/// cross-oracle agreement, the deletion/contraction identity for every
/// column, the Macaulay and growth bounds, injectivity of the power maps,
/// log-concavity, uniform-matroid consistency, and the d = 2 closed form.
std::vector<CheckResult> run_theorem_battery(const RepMatrix& m, std::uint64_t seed = 0xbea7);

/// Canonical text of a matrix: header "d m" then rows of rationals.
std::string matrix_text(const RatMatrix& m);

/// FNV-1a 64-bit digest of the canonical text, as fixed-width hex.
std::string matrix_hash(const RatMatrix& m);

}  // namespace matalg

#endif  // MATALG_ANALYSIS_HPP
