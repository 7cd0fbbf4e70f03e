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

#ifndef MATALG_ALGEBRA_HPP
#define MATALG_ALGEBRA_HPP

#include <map>
#include <optional>
#include <vector>

#include "matalg/matroid.hpp"
#include "matalg/poly.hpp"

namespace matalg {

/// Element of B = k[x_1..x_m]/(x_1^2..x_m^2), stored as a sparse map from
/// squarefree monomials (support bitmasks) to nonzero coefficients.
using BElement = std::map<Mask, Rational>;

void add_scaled(BElement& dst, const BElement& src, const Rational& c);

/// Product in B: supports union when disjoint, zero otherwise.
BElement multiply(const BElement& a, const BElement& b);
BElement multiply_linear(const BElement& linear, const BElement& e);
BElement power(const BElement& e, int exponent);

bool is_homogeneous(const BElement& e, int degree);

/// Number of indeterminates with nonzero coefficient in a linear form f.
/// f^support_size(f) != 0 and f^(1+support_size(f)) = 0 in B.
int support_size(const BElement& linear);

/// Row i of the representation as a linear form in B_1.
BElement linear_form(const RepMatrix& m, Index row);

/// Linear form (p M) in B_1 for a coefficient vector p of length d.
BElement linear_combination(const RepMatrix& m, const RatVector& p);

/// Coordinates of a homogeneous element on the degree-d squarefree
/// monomials, ordered by ascending mask (colex).
RatVector dense_coords(const BElement& e, int ground_size, int degree);

/// Per-degree bases of A(M) inside B: level j spans A_j.
struct GradedBasis {
  std::vector<std::vector<BElement>> levels;  // size m+1
  std::vector<long long> dims;                // size m+1
};

/// A_0 = span{1}; A_(j+1) = span{ f_i b : i in [d], b basis of A_j },
/// reduced by exact elimination over the squarefree-monomial coordinates.
GradedBasis build_graded_basis(const RepMatrix& m);

/// Hilbert function of A(M) from the direct graded construction.
UniPoly hilbert_direct(const RepMatrix& m);

struct LefschetzCertificate {
  bool injective = false;
  Index domain_dim = 0;
  Index image_rank = 0;
  BElement multiplier;  // the degree-one form g that was used
};

/// Verifies that multiplication by g^(m-2j) maps A_j into A_(m-j)
/// injectively.  g must be a full-support form in A_1; when absent one is
/// sampled as p M with small random integer p until every coordinate of
/// p M is nonzero.
LefschetzCertificate lefschetz_injective(const RepMatrix& m, int j,
                                         const std::optional<BElement>& g = std::nullopt,
                                         std::uint64_t seed = 0x5eed);
LefschetzCertificate lefschetz_injective(const RepMatrix& m, const GradedBasis& basis, int j,
                                         const std::optional<BElement>& g = std::nullopt,
                                         std::uint64_t seed = 0x5eed);

/// Hilbert function of R/J(M) where R = k[z_1..z_d] and J(M) is generated
/// by p^(1 + support_size(p M)) over linear forms p.  The generators are
/// sampled stratum by stratum: for every flat of rank < d, random vectors from
/// the annihilator of its column span.  Sampled spans only ever
/// under-estimate J, so the result can only over-estimate the true
/// dimensions; the sample count doubles every round until the dimension
/// vector repeats.  Throws std::runtime_error if it fails to stabilize
/// within the round cap.
UniPoly hilbert_via_ideal(const RepMatrix& m, int samples_per_flat = 4,
                          std::uint64_t seed = 0x1dea);

/// Closed-form Hilbert function for d = 2 from the parallel class sizes:
/// dim A_j = j + 1 - sum_i w_i (j - i + 1) with
/// w_i = #{classes with 1 + m - e_h = i}.  Rejects d != 2.
UniPoly hilbert_d2_closed_form(const RepMatrix& m);

}  // namespace matalg

#endif  // MATALG_ALGEBRA_HPP
