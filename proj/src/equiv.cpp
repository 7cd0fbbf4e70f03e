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

#include "matalg/equiv.hpp"

#include <algorithm>
#include <functional>

#include "matalg/tutte.hpp"

namespace matalg {

namespace {

RatVector normalize_direction(RatVector v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero()) {
      const Rational inv = v(i).inverse();
      for (Index k = i; k < v.size(); ++k) v(k) *= inv;
      return v;
    }
  }
  return v;
}

bool vector_less(const RatVector& a, const RatVector& b) {
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

bool vector_equal(const RatVector& a, const RatVector& b) {
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return false;
  }
  return true;
}

}  // namespace

std::vector<ProjectiveColumn> line_multiset(const RepMatrix& m) {
  std::vector<RatVector> dirs;
  dirs.reserve(static_cast<std::size_t>(m.ground_size()));
  for (Index j = 0; j < m.ground_size(); ++j) dirs.push_back(normalize_direction(m.column(j)));
  std::sort(dirs.begin(), dirs.end(), vector_less);

  std::vector<ProjectiveColumn> out;
  for (const RatVector& v : dirs) {
    if (!out.empty() && vector_equal(out.back().direction, v)) {
      ++out.back().multiplicity;
    } else {
      out.push_back(ProjectiveColumn{v, 1});
    }
  }
  return out;
}

bool same_line_multiset(const std::vector<ProjectiveColumn>& a,
                        const std::vector<ProjectiveColumn>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].multiplicity != b[i].multiplicity) return false;
    if (!vector_equal(a[i].direction, b[i].direction)) return false;
  }
  return true;
}

RatMatrix EquivalenceWitness::p_matrix() const {
  const Index n = static_cast<Index>(perm.size());
  RatMatrix p = RatMatrix::Zero(n, n);
  for (Index c = 0; c < n; ++c) p(c, perm[static_cast<std::size_t>(c)]) = scale[static_cast<std::size_t>(c)];
  return p;
}

bool EquivalenceWitness::verify(const RepMatrix& m, const RepMatrix& n) const {
  if (m.ground_size() != n.ground_size() || m.dim() != n.dim()) return false;
  RatMatrix lhs = q * m.matrix() * p_matrix();
  return exactly_equal(lhs, n.matrix());
}

namespace {

// Ratio constraints between the diagonal entries of the unknown scaling:
// a union-find over coordinate indices carrying s_i = ratio_i * s_root.
struct ScalingState {
  std::vector<int> parent;
  std::vector<Rational> ratio;  // to parent

  explicit ScalingState(int d) : parent(static_cast<std::size_t>(d)), ratio(static_cast<std::size_t>(d), Rational(1)) {
    for (int i = 0; i < d; ++i) parent[static_cast<std::size_t>(i)] = i;
  }

  std::pair<int, Rational> find(int i) const {
    Rational r(1);
    while (parent[static_cast<std::size_t>(i)] != i) {
      r *= ratio[static_cast<std::size_t>(i)];
      i = parent[static_cast<std::size_t>(i)];
    }
    return {i, r};
  }

  // Enforce s_a = factor * s_b.  Returns false on contradiction.
  bool merge(int a, int b, const Rational& factor) {
    auto [ra, qa] = find(a);  // s_a = qa * s_ra
    auto [rb, qb] = find(b);
    if (ra == rb) return qa == factor * qb;
    parent[static_cast<std::size_t>(ra)] = rb;
    ratio[static_cast<std::size_t>(ra)] = factor * qb / qa;
    return true;
  }
};

struct ColumnCoords {
  std::vector<Index> support;     // coordinate indices with nonzero entry
  RatVector values;               // full vector
};

ColumnCoords coords_of(const RatVector& v) {
  ColumnCoords c;
  c.values = v;
  for (Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero()) c.support.push_back(i);
  }
  return c;
}

struct TupleSearch {
  int d = 0;
  Index n_cols = 0;
  std::vector<ColumnCoords> u;        // M columns in M-basis coordinates
  std::vector<ColumnCoords> t;        // N columns in N-tuple coordinates
  std::vector<std::size_t> order;     // processing order of M columns
  std::vector<Index> assignment;      // M column -> N column
  std::vector<bool> used;

  bool extend(std::size_t level, const ScalingState& state) {
    if (level == order.size()) return true;
    const std::size_t c = order[level];
    const ColumnCoords& uc = u[c];
    for (Index target = 0; target < n_cols; ++target) {
      if (used[static_cast<std::size_t>(target)]) continue;
      const ColumnCoords& vt = t[static_cast<std::size_t>(target)];
      if (vt.support != uc.support) continue;

      ScalingState next = state;
      bool ok = true;
      const Index i0 = uc.support.front();
      // s_i u_i / v_i constant across the support: tie every index to i0.
      const Rational base = vt.values(i0) / uc.values(i0);
      for (std::size_t k = 1; k < uc.support.size() && ok; ++k) {
        const Index ik = uc.support[k];
        const Rational f = (vt.values(ik) / uc.values(ik)) / base;
        ok = next.merge(static_cast<int>(ik), static_cast<int>(i0), f);
      }
      if (!ok) continue;
      used[static_cast<std::size_t>(target)] = true;
      assignment[c] = target;
      if (extend(level + 1, next)) return true;
      used[static_cast<std::size_t>(target)] = false;
    }
    return false;
  }
};

std::optional<EquivalenceWitness> witness_from_assignment(const RepMatrix& m, const RepMatrix& n,
                                                          const RatMatrix& n_tuple,
                                                          const RatMatrix& m_basis_inv,
                                                          const TupleSearch& search) {
  const int d = search.d;
  // Any scaling consistent with the final ratio state works; rebuild it from
  // the assignment so each connected component gets root value 1.
  ScalingState state(d);
  for (std::size_t c = 0; c < search.u.size(); ++c) {
    const ColumnCoords& uc = search.u[c];
    const ColumnCoords& vt = search.t[static_cast<std::size_t>(search.assignment[c])];
    const Index i0 = uc.support.front();
    const Rational base = vt.values(i0) / uc.values(i0);
    for (std::size_t k = 1; k < uc.support.size(); ++k) {
      const Index ik = uc.support[k];
      const Rational f = (vt.values(ik) / uc.values(ik)) / base;
      if (!state.merge(static_cast<int>(ik), static_cast<int>(i0), f)) return std::nullopt;
    }
  }
  RatMatrix diag = RatMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    auto [root, r] = state.find(i);
    (void)root;
    diag(i, i) = r;  // s_root = 1
  }

  EquivalenceWitness w;
  w.q = n_tuple * diag * m_basis_inv;
  const Index cols = m.ground_size();
  w.perm.assign(static_cast<std::size_t>(cols), 0);
  w.scale.assign(static_cast<std::size_t>(cols), Rational(1));
  RatMatrix qm = w.q * m.matrix();
  for (Index c = 0; c < cols; ++c) {
    const Index target = search.assignment[static_cast<std::size_t>(c)];
    w.perm[static_cast<std::size_t>(c)] = target;
    Rational lambda(0);
    for (Index r = 0; r < qm.rows(); ++r) {
      if (!qm(r, c).is_zero()) {
        lambda = n.matrix()(r, target) / qm(r, c);
        break;
      }
    }
    if (lambda.is_zero()) return std::nullopt;
    w.scale[static_cast<std::size_t>(c)] = lambda;
  }
  if (!w.verify(m, n)) return std::nullopt;
  return w;
}

}  // namespace

std::optional<EquivalenceWitness> linearly_equivalent(const RepMatrix& m, const RepMatrix& n) {
  if (m.dim() != n.dim() || m.ground_size() != n.ground_size()) return std::nullopt;
  const int d = static_cast<int>(m.dim());
  const Index cols = m.ground_size();

  // Cheap necessary conditions first.
  if (hilbert_via_activity(m) != hilbert_via_activity(n)) return std::nullopt;
  auto class_profile = [](const RepMatrix& rep) {
    std::vector<int> sizes;
    for (Mask cls : parallel_classes(rep)) sizes.push_back(popcount(cls));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  };
  if (class_profile(m) != class_profile(n)) return std::nullopt;

  const Mask basis_mask = lex_earliest_basis(m, full_mask(static_cast<int>(cols)));
  std::vector<Index> basis_cols;
  for (Index j = 0; j < cols; ++j) {
    if (mask_contains(basis_mask, static_cast<int>(j))) basis_cols.push_back(j);
  }
  RatMatrix m_basis(d, d);
  for (int i = 0; i < d; ++i) m_basis.col(i) = m.column(basis_cols[static_cast<std::size_t>(i)]);
  const RatMatrix m_basis_inv = inverse(m_basis);

  // M columns in basis coordinates, shared by every tuple.
  RatMatrix u_mat = m_basis_inv * m.matrix();
  std::vector<ColumnCoords> u_coords;
  for (Index c = 0; c < cols; ++c) u_coords.push_back(coords_of(u_mat.col(c)));

  // Larger supports constrain more; fix the processing order up front.
  std::vector<std::size_t> order(static_cast<std::size_t>(cols));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return u_coords[a].support.size() > u_coords[b].support.size();
  });

  // Ordered independent d-tuples of N columns as images of the basis lines.
  std::vector<Index> tuple(static_cast<std::size_t>(d), -1);
  std::vector<bool> in_tuple(static_cast<std::size_t>(cols), false);
  std::optional<EquivalenceWitness> found;

  auto try_tuple = [&]() {
    RatMatrix n_tuple(d, d);
    for (int i = 0; i < d; ++i) n_tuple.col(i) = n.column(tuple[static_cast<std::size_t>(i)]);
    if (determinant(n_tuple).is_zero()) return;
    TupleSearch search;
    search.d = d;
    search.n_cols = cols;
    search.u = u_coords;
    RatMatrix t_mat = inverse(n_tuple) * n.matrix();
    for (Index c = 0; c < cols; ++c) search.t.push_back(coords_of(t_mat.col(c)));
    search.order = order;
    search.assignment.assign(static_cast<std::size_t>(cols), -1);
    search.used.assign(static_cast<std::size_t>(cols), false);
    ScalingState state(d);
    if (search.extend(0, state)) {
      found = witness_from_assignment(m, n, n_tuple, m_basis_inv, search);
    }
  };

  std::function<void(int)> pick = [&](int level) {
    if (found.has_value()) return;
    if (level == d) {
      try_tuple();
      return;
    }
    for (Index c = 0; c < cols && !found.has_value(); ++c) {
      if (in_tuple[static_cast<std::size_t>(c)]) continue;
      in_tuple[static_cast<std::size_t>(c)] = true;
      tuple[static_cast<std::size_t>(level)] = c;
      pick(level + 1);
      in_tuple[static_cast<std::size_t>(c)] = false;
    }
  };
  pick(0);
  return found;
}

IsomorphismResult algebras_isomorphic(const RepMatrix& m, const RepMatrix& n) {
  IsomorphismResult r;
  r.witness = linearly_equivalent(m, n);
  r.isomorphic = r.witness.has_value();
  return r;
}

}  // namespace matalg
