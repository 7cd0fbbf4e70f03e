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

#include "matalg/linalg.hpp"

#include <stdexcept>

namespace matalg {

RatVector SpanBasis::reduce(RatVector v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& c = v(pivots_[k]);
    if (!c.is_zero()) {
      const Rational f = c;  // rows_[k] has unit pivot
      for (Index i = 0; i < dim_; ++i) {
        if (!rows_[k](i).is_zero()) v(i) -= f * rows_[k](i);
      }
    }
  }
  return v;
}

bool SpanBasis::contains(const RatVector& v) const { return is_zero_vector(reduce(v)); }

bool SpanBasis::insert(const RatVector& v) {
  RatVector r = reduce(v);
  Index pivot = -1;
  for (Index i = 0; i < dim_; ++i) {
    if (!r(i).is_zero()) {
      pivot = i;
      break;
    }
  }
  if (pivot < 0) return false;
  const Rational inv = r(pivot).inverse();
  for (Index i = pivot; i < dim_; ++i) {
    if (!r(i).is_zero()) r(i) *= inv;
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

void SpanBasis::pop() {
  rows_.pop_back();
  pivots_.pop_back();
}

bool is_zero_vector(const RatVector& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero()) return false;
  }
  return true;
}

bool exactly_equal(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

namespace {

// Forward elimination in place; returns the pivot column of each pivot row.
std::vector<Index> forward_eliminate(RatMatrix& a) {
  const Index rows = a.rows(), cols = a.cols();
  std::vector<Index> pivot_cols;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pr = -1;
    for (Index i = r; i < rows; ++i) {
      if (!a(i, c).is_zero()) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != r) a.row(r).swap(a.row(pr));
    const Rational inv = a(r, c).inverse();
    for (Index j = c; j < cols; ++j) {
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    }
    for (Index i = r + 1; i < rows; ++i) {
      if (!a(i, c).is_zero()) {
        const Rational f = a(i, c);
        for (Index j = c; j < cols; ++j) {
          if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
        }
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace

Index rank_of(const RatMatrix& m) {
  RatMatrix a = m;
  return static_cast<Index>(forward_eliminate(a).size());
}

Index span_dim(const std::vector<RatVector>& vectors) {
  if (vectors.empty()) return 0;
  SpanBasis span(vectors.front().size());
  for (const RatVector& v : vectors) span.insert(v);
  return span.size();
}

PivotForm reduced_row_echelon(RatMatrix m) {
  std::vector<Index> pivot_cols = forward_eliminate(m);
  for (Index r = static_cast<Index>(pivot_cols.size()) - 1; r >= 0; --r) {
    const Index c = pivot_cols[static_cast<std::size_t>(r)];
    for (Index i = 0; i < r; ++i) {
      if (!m(i, c).is_zero()) {
        const Rational f = m(i, c);
        for (Index j = c; j < m.cols(); ++j) {
          if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
      }
    }
  }
  return PivotForm{std::move(m), std::move(pivot_cols)};
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const Index cols = m.cols();
  PivotForm rref = reduced_row_echelon(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : rref.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<RatVector> basis;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    RatVector v = RatVector::Zero(cols);
    v(f) = Rational(1);
    for (std::size_t r = 0; r < rref.pivot_cols.size(); ++r) {
      v(rref.pivot_cols[r]) = -rref.reduced(static_cast<Index>(r), f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
  const Index n = m.rows();
  if (n == 0) return Rational(1);
  RatMatrix a = m;
  Rational prev(1);
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      Index pr = -1;
      for (Index i = k + 1; i < n; ++i) {
        if (!a(i, k).is_zero()) {
          pr = i;
          break;
        }
      }
      if (pr < 0) return Rational(0);
      a.row(k).swap(a.row(pr));
      sign = -sign;
    }
    // Bareiss step: exact division by the previous pivot.
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = Rational(0);
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square matrix");
  const Index n = m.rows();
  RatMatrix aug(n, 2 * n);
  aug.block(0, 0, n, n) = m;
  aug.block(0, n, n, n) = RatMatrix::Identity(n, n);
  PivotForm rref = reduced_row_echelon(std::move(aug));
  for (Index i = 0; i < n; ++i) {
    if (static_cast<Index>(i) >= static_cast<Index>(rref.pivot_cols.size()) ||
        rref.pivot_cols[static_cast<std::size_t>(i)] != i) {
      throw std::invalid_argument("inverse: singular matrix");
    }
  }
  return rref.reduced.block(0, n, n, n);
}

RatMatrix rowspace_basis(const RatMatrix& m) {
  PivotForm rref = reduced_row_echelon(m);
  const Index r = static_cast<Index>(rref.pivot_cols.size());
  RatMatrix out(r, m.cols());
  for (Index i = 0; i < r; ++i) out.row(i) = rref.reduced.row(i);
  return out;
}

StandardForm standard_form(const RatMatrix& m) {
  PivotForm rref = reduced_row_echelon(m);
  const Index d = static_cast<Index>(rref.pivot_cols.size());
  if (d != m.rows()) throw std::invalid_argument("standard_form: matrix is not of full row rank");
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : rref.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  StandardForm out;
  out.col_perm.reserve(static_cast<std::size_t>(cols));
  for (Index c : rref.pivot_cols) out.col_perm.push_back(c);
  for (Index c = 0; c < cols; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) out.col_perm.push_back(c);
  }
  out.full.resize(d, cols);
  for (Index k = 0; k < cols; ++k) out.full.col(k) = rref.reduced.col(out.col_perm[static_cast<std::size_t>(k)]);
  out.n_block = out.full.block(0, d, d, cols - d);
  return out;
}

}  // namespace matalg
