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

#include "matalg/matroid.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace matalg {

namespace {

bool is_zero_column(const RatMatrix& m, Index j) {
  for (Index i = 0; i < m.rows(); ++i) {
    if (!m(i, j).is_zero()) return false;
  }
  return true;
}

}  // namespace

std::vector<Mask> subsets_of_size(int m, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > m) return out;
  for (Mask s = 0; s < (Mask{1} << m); ++s) {
    if (popcount(s) == k) out.push_back(s);
  }
  return out;
}

Index colex_rank(Mask mask) {
  static const auto table = [] {
    std::array<std::array<long long, 31>, 31> c{};
    for (int n = 0; n <= 30; ++n) {
      c[static_cast<std::size_t>(n)][0] = 1;
      for (int k = 1; k <= n; ++k) {
        c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
            c[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
            (k <= n - 1 ? c[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)] : 0);
      }
    }
    return c;
  }();
  long long r = 0;
  int i = 1;
  while (mask != 0) {
    const int b = __builtin_ctz(mask);
    if (b >= i) r += table[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)];
    mask &= mask - 1;
    ++i;
  }
  return static_cast<Index>(r);
}

RatMatrix strip_zero_columns(const RatMatrix& m, int* stripped) {
  std::vector<Index> keep;
  for (Index j = 0; j < m.cols(); ++j) {
    if (!is_zero_column(m, j)) keep.push_back(j);
  }
  if (stripped) *stripped = static_cast<int>(m.cols() - static_cast<Index>(keep.size()));
  RatMatrix out(m.rows(), static_cast<Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) out.col(static_cast<Index>(k)) = m.col(keep[k]);
  return out;
}

RepMatrix::RepMatrix(const RatMatrix& m) {
  if (m.cols() > kMaxGroundSize) throw std::invalid_argument("RepMatrix: too many columns");
  mat_ = strip_zero_columns(m, &stripped_);
  if (rank_of(mat_) != mat_.rows()) {
    throw std::invalid_argument("RepMatrix: matrix does not have full row rank");
  }
}

RepMatrix RepMatrix::from_rowspace(const RatMatrix& m) {
  RepMatrix r;
  if (m.cols() > kMaxGroundSize) throw std::invalid_argument("RepMatrix: too many columns");
  r.mat_ = strip_zero_columns(rowspace_basis(m), &r.stripped_);
  return r;
}

RatMatrix columns_of(const RatMatrix& m, Mask subset) {
  RatMatrix out(m.rows(), popcount(subset));
  Index k = 0;
  for (Index j = 0; j < m.cols(); ++j) {
    if (mask_contains(subset, static_cast<int>(j))) out.col(k++) = m.col(j);
  }
  return out;
}

Index rank_subset(const RepMatrix& m, Mask subset) {
  SpanBasis span(m.dim());
  for (Index j = 0; j < m.ground_size(); ++j) {
    if (mask_contains(subset, static_cast<int>(j))) span.insert(m.column(j));
  }
  return span.size();
}

bool is_independent(const RepMatrix& m, Mask subset) {
  return rank_subset(m, subset) == popcount(subset);
}

Mask closure(const RepMatrix& m, Mask subset) {
  SpanBasis span(m.dim());
  for (Index j = 0; j < m.ground_size(); ++j) {
    if (mask_contains(subset, static_cast<int>(j))) span.insert(m.column(j));
  }
  Mask out = subset;
  for (Index j = 0; j < m.ground_size(); ++j) {
    if (!mask_contains(subset, static_cast<int>(j)) && span.contains(m.column(j))) {
      out |= Mask{1} << j;
    }
  }
  return out;
}

Mask lex_earliest_basis(const RepMatrix& m, Mask subset) {
  SpanBasis span(m.dim());
  Mask basis = 0;
  for (Index j = 0; j < m.ground_size(); ++j) {
    if (mask_contains(subset, static_cast<int>(j)) && span.insert(m.column(j))) {
      basis |= Mask{1} << j;
    }
  }
  return basis;
}

Mask externally_active_set(const RepMatrix& m, Mask subset) {
  const Mask cl = closure(m, subset);
  const Mask base = lex_earliest_basis(m, subset);
  Mask active = 0;
  for (Index j = 0; j < m.ground_size(); ++j) {
    const Mask bit = Mask{1} << j;
    if ((cl & bit) && !(subset & bit)) {
      if (lex_earliest_basis(m, subset | bit) == base) active |= bit;
    }
  }
  return active;
}

int external_activity(const RepMatrix& m, Mask subset) {
  return popcount(externally_active_set(m, subset));
}

namespace {

void enumerate_independent(const RepMatrix& m, Index next, Mask current, SpanBasis& span,
                           std::vector<Mask>& out) {
  out.push_back(current);
  for (Index j = next; j < m.ground_size(); ++j) {
    if (span.insert(m.column(j))) {
      enumerate_independent(m, j + 1, current | (Mask{1} << j), span, out);
      span.pop();
    }
  }
}

}  // namespace

std::vector<Mask> independent_sets(const RepMatrix& m) {
  std::vector<Mask> out;
  SpanBasis span(m.dim());
  enumerate_independent(m, 0, 0, span, out);
  return out;
}

std::vector<Mask> flats(const RepMatrix& m) {
  std::set<Mask> seen;
  for (Mask s : independent_sets(m)) seen.insert(closure(m, s));
  return std::vector<Mask>(seen.begin(), seen.end());
}

std::vector<Mask> parallel_classes(const RepMatrix& m) {
  const Index n = m.ground_size();
  std::vector<Mask> classes;
  std::vector<bool> assigned(static_cast<std::size_t>(n), false);
  for (Index j = 0; j < n; ++j) {
    if (assigned[static_cast<std::size_t>(j)]) continue;
    Mask cls = Mask{1} << j;
    assigned[static_cast<std::size_t>(j)] = true;
    for (Index k = j + 1; k < n; ++k) {
      if (assigned[static_cast<std::size_t>(k)]) continue;
      // Proportionality: the 2-column submatrix has rank 1.
      RatMatrix pair(m.dim(), 2);
      pair.col(0) = m.column(j);
      pair.col(1) = m.column(k);
      if (rank_of(pair) == 1) {
        cls |= Mask{1} << k;
        assigned[static_cast<std::size_t>(k)] = true;
      }
    }
    classes.push_back(cls);
  }
  return classes;
}

RatMatrix raw_delete(const RatMatrix& m, Index j) {
  RatMatrix out(m.rows(), m.cols() - 1);
  Index k = 0;
  for (Index c = 0; c < m.cols(); ++c) {
    if (c != j) out.col(k++) = m.col(c);
  }
  return out;
}

RatMatrix raw_contract(const RatMatrix& m, Index j) {
  Index pivot_row = -1;
  for (Index i = m.rows() - 1; i >= 0; --i) {
    if (!m(i, j).is_zero()) {
      pivot_row = i;
      break;
    }
  }
  if (pivot_row < 0) throw std::invalid_argument("raw_contract: zero column");

  RatMatrix work = m;
  const Rational inv = work(pivot_row, j).inverse();
  for (Index h = 0; h < work.cols(); ++h) {
    if (h == j || work(pivot_row, h).is_zero()) continue;
    const Rational f = work(pivot_row, h) * inv;
    for (Index i = 0; i < work.rows(); ++i) {
      if (!work(i, j).is_zero()) work(i, h) -= f * work(i, j);
    }
  }

  RatMatrix out(m.rows() - 1, m.cols() - 1);
  Index r = 0;
  for (Index i = 0; i < work.rows(); ++i) {
    if (i == pivot_row) continue;
    Index c = 0;
    for (Index h = 0; h < work.cols(); ++h) {
      if (h == j) continue;
      out(r, c++) = work(i, h);
    }
    ++r;
  }
  return out;
}

RepMatrix delete_column(const RepMatrix& m, Index j) {
  return RepMatrix(raw_delete(m.matrix(), j));  // throws when j is a coloop
}

RepMatrix contract_column(const RepMatrix& m, Index j) {
  return RepMatrix(raw_contract(m.matrix(), j));
}

bool is_uniform(const RepMatrix& m) {
  const int d = static_cast<int>(m.dim());
  const int n = static_cast<int>(m.ground_size());
  std::vector<int> idx(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (d == 0) return true;
  while (true) {
    Mask s = 0;
    for (int i : idx) s |= Mask{1} << i;
    if (!is_independent(m, s)) return false;
    int k = d - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - d + k) --k;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
    for (int t = k + 1; t < d; ++t) {
      idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
  return true;
}

namespace {

bool any_vanishing_minor(const RatMatrix& n, int h) {
  const int rows = static_cast<int>(n.rows());
  const int cols = static_cast<int>(n.cols());
  std::vector<int> ri(static_cast<std::size_t>(h)), ci(static_cast<std::size_t>(h));

  auto next_combo = [](std::vector<int>& v, int limit) {
    int k = static_cast<int>(v.size()) - 1;
    while (k >= 0 && v[static_cast<std::size_t>(k)] == limit - static_cast<int>(v.size()) + k) --k;
    if (k < 0) return false;
    ++v[static_cast<std::size_t>(k)];
    for (std::size_t t = static_cast<std::size_t>(k) + 1; t < v.size(); ++t) v[t] = v[t - 1] + 1;
    return true;
  };

  for (int i = 0; i < h; ++i) ri[static_cast<std::size_t>(i)] = i;
  do {
    for (int i = 0; i < h; ++i) ci[static_cast<std::size_t>(i)] = i;
    do {
      RatMatrix sub(h, h);
      for (int a = 0; a < h; ++a) {
        for (int b = 0; b < h; ++b) {
          sub(a, b) = n(ri[static_cast<std::size_t>(a)], ci[static_cast<std::size_t>(b)]);
        }
      }
      if (determinant(sub).is_zero()) return true;
    } while (next_combo(ci, cols));
  } while (next_combo(ri, rows));
  return false;
}

}  // namespace

bool has_vanishing_minor(const RepMatrix& m) {
  const Index d = m.dim();
  const Index n_cols = m.ground_size() - d;
  if (n_cols <= 0) return false;
  const RatMatrix n = standard_form(m.matrix()).n_block;
  const int h_max = static_cast<int>(std::min(d, n_cols));
  for (int h = 1; h <= h_max; ++h) {
    if (any_vanishing_minor(n, h)) return true;
  }
  return false;
}

}  // namespace matalg
