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

#include "matalg/tutte.hpp"

#include <stdexcept>

namespace matalg {

UniPoly poincare_delcon(const RepMatrix& m) {
  const Index d = m.dim();
  const Index n = m.ground_size();
  if (d == 0) return UniPoly({1});
  if (d == 1) return UniPoly::all_ones(static_cast<int>(n));

  const Index j = n - 1;  // highest-index column, for determinism
  RatMatrix deleted = raw_delete(m.matrix(), j);
  if (rank_of(deleted) < d) {
    // j is a coloop; fall back to the rank expansion for this subproblem.
    return poincare_from_tutte(m);
  }
  UniPoly p_del = poincare_delcon(RepMatrix(deleted));
  UniPoly p_con = poincare_delcon(contract_column(m, j));
  return p_del.shifted(1) + p_con;
}

namespace {

// DFS over subsets accumulating counts by (corank, nullity).
void walk_subsets(const RepMatrix& m, Index next, int card, SpanBasis& span,
                  std::vector<std::vector<long long>>& counts) {
  if (next == m.ground_size()) {
    const int r = static_cast<int>(span.size());
    ++counts[static_cast<std::size_t>(m.dim() - r)][static_cast<std::size_t>(card - r)];
    return;
  }
  walk_subsets(m, next + 1, card, span, counts);
  if (span.insert(m.column(next))) {
    walk_subsets(m, next + 1, card + 1, span, counts);
    span.pop();
  } else {
    walk_subsets(m, next + 1, card + 1, span, counts);
  }
}

}  // namespace

BiPoly tutte_rank_expansion(const RepMatrix& m) {
  const int d = static_cast<int>(m.dim());
  const int n = static_cast<int>(m.ground_size());
  std::vector<std::vector<long long>> counts(
      static_cast<std::size_t>(d) + 1,
      std::vector<long long>(static_cast<std::size_t>(n - d) + 1, 0));
  SpanBasis span(m.dim());
  walk_subsets(m, 0, 0, span, counts);

  BiPoly t;
  for (int a = 0; a <= d; ++a) {
    for (int b = 0; b <= n - d; ++b) {
      const long long c = counts[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (c == 0) continue;
      // c * (x-1)^a (y-1)^b expanded by binomials.
      for (int i = 0; i <= a; ++i) {
        const long long xc = binomial_ll(a, i) * (((a - i) % 2 == 0) ? 1 : -1);
        for (int j = 0; j <= b; ++j) {
          const long long yc = binomial_ll(b, j) * (((b - j) % 2 == 0) ? 1 : -1);
          t.add(i, j, c * xc * yc);
        }
      }
    }
  }
  return t;
}

UniPoly poincare_from_tutte(const RepMatrix& m) {
  const int d = static_cast<int>(m.dim());
  const int n = static_cast<int>(m.ground_size());
  const BiPoly t = tutte_rank_expansion(m);

  // t^(m-d) T(1+t, 1/t): the term x^a y^b contributes
  // binomial(a, i) t^(m - d - b + i).
  std::vector<long long> coeffs(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [key, c] : t.terms()) {
    const int a = key.first, b = key.second;
    const int base = n - d - b;
    if (base < 0) {
      throw std::logic_error("poincare_from_tutte: negative exponent survived substitution");
    }
    for (int i = 0; i <= a; ++i) {
      const int e = base + i;
      if (e > n) throw std::logic_error("poincare_from_tutte: degree above m");
      coeffs[static_cast<std::size_t>(e)] += c * binomial_ll(a, i);
    }
  }
  return UniPoly(std::move(coeffs));
}

UniPoly hilbert_via_activity(const RepMatrix& m) {
  const int n = static_cast<int>(m.ground_size());
  std::vector<long long> coeffs(static_cast<std::size_t>(n) + 1, 0);
  for (Mask s : independent_sets(m)) {
    const int degree = n - popcount(s) - external_activity(m, s);
    coeffs[static_cast<std::size_t>(degree)] += 1;
  }
  return UniPoly(std::move(coeffs));
}

UniPoly poincare_of_rowspace(const RatMatrix& raw) {
  return poincare_delcon(RepMatrix::from_rowspace(raw));
}

DelConReport delcon_identity_check(const RepMatrix& m) {
  const UniPoly p = poincare_delcon(m);
  for (Index j = 0; j < m.ground_size(); ++j) {
    UniPoly p_del = poincare_of_rowspace(raw_delete(m.matrix(), j));
    UniPoly p_con = poincare_of_rowspace(raw_contract(m.matrix(), j));
    if (p != p_del.shifted(1) + p_con) return DelConReport{false, j};
  }
  return DelConReport{};
}

}  // namespace matalg
