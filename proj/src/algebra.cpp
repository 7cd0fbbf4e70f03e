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

#include "matalg/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "matalg/rng.hpp"

namespace matalg {

void add_scaled(BElement& dst, const BElement& src, const Rational& c) {
  if (c.is_zero()) return;
  for (const auto& [mask, v] : src) {
    auto [it, inserted] = dst.emplace(mask, v * c);
    if (!inserted) {
      it->second += v * c;
      if (it->second.is_zero()) dst.erase(it);
    }
  }
}

BElement multiply(const BElement& a, const BElement& b) {
  BElement out;
  for (const auto& [ma, va] : a) {
    for (const auto& [mb, vb] : b) {
      if (ma & mb) continue;  // a repeated indeterminate squares to zero
      const Mask m = ma | mb;
      auto [it, inserted] = out.emplace(m, va * vb);
      if (!inserted) {
        it->second += va * vb;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

BElement multiply_linear(const BElement& linear, const BElement& e) { return multiply(linear, e); }

BElement power(const BElement& e, int exponent) {
  BElement acc{{0u, Rational(1)}};
  for (int k = 0; k < exponent; ++k) acc = multiply(acc, e);
  return acc;
}

bool is_homogeneous(const BElement& e, int degree) {
  for (const auto& [mask, v] : e) {
    (void)v;
    if (popcount(mask) != degree) return false;
  }
  return true;
}

int support_size(const BElement& linear) {
  int n = 0;
  for (const auto& [mask, v] : linear) {
    (void)v;
    if (popcount(mask) != 1) throw std::invalid_argument("support_size: not a linear form");
    ++n;
  }
  return n;
}

BElement linear_form(const RepMatrix& m, Index row) {
  BElement f;
  for (Index j = 0; j < m.ground_size(); ++j) {
    if (!m.matrix()(row, j).is_zero()) f[Mask{1} << j] = m.matrix()(row, j);
  }
  return f;
}

BElement linear_combination(const RepMatrix& m, const RatVector& p) {
  BElement f;
  for (Index j = 0; j < m.ground_size(); ++j) {
    Rational c(0);
    for (Index i = 0; i < m.dim(); ++i) c += p(i) * m.matrix()(i, j);
    if (!c.is_zero()) f[Mask{1} << j] = c;
  }
  return f;
}

RatVector dense_coords(const BElement& e, int ground_size, int degree) {
  RatVector v = RatVector::Zero(static_cast<Index>(binomial(ground_size, degree).get_si()));
  for (const auto& [mask, c] : e) {
    if (popcount(mask) != degree) throw std::invalid_argument("dense_coords: not homogeneous");
    v(colex_rank(mask)) = c;
  }
  return v;
}

GradedBasis build_graded_basis(const RepMatrix& m) {
  const int n = static_cast<int>(m.ground_size());
  const int d = static_cast<int>(m.dim());

  std::vector<BElement> generators;
  generators.reserve(static_cast<std::size_t>(d));
  for (Index i = 0; i < d; ++i) generators.push_back(linear_form(m, i));

  GradedBasis out;
  out.levels.assign(static_cast<std::size_t>(n) + 1, {});
  out.dims.assign(static_cast<std::size_t>(n) + 1, 0);
  out.levels[0].push_back(BElement{{0u, Rational(1)}});
  out.dims[0] = 1;

  for (int j = 0; j < n; ++j) {
    SpanBasis span(static_cast<Index>(binomial(n, j + 1).get_si()));
    std::vector<BElement> next;
    for (const BElement& b : out.levels[static_cast<std::size_t>(j)]) {
      for (const BElement& f : generators) {
        BElement prod = multiply_linear(f, b);
        if (span.insert(dense_coords(prod, n, j + 1))) next.push_back(std::move(prod));
      }
    }
    out.dims[static_cast<std::size_t>(j) + 1] = static_cast<long long>(next.size());
    out.levels[static_cast<std::size_t>(j) + 1] = std::move(next);
  }
  return out;
}

UniPoly hilbert_direct(const RepMatrix& m) { return UniPoly(build_graded_basis(m).dims); }

namespace {

BElement sample_full_support_form(const RepMatrix& m, Rng& rng) {
  const int n = static_cast<int>(m.ground_size());
  for (int attempt = 0; attempt < 256; ++attempt) {
    const long h = 2 + attempt / 8;
    RatVector p(m.dim());
    for (Index i = 0; i < m.dim(); ++i) p(i) = Rational(rng.nonzero_int(h));
    BElement g = linear_combination(m, p);
    if (support_size(g) == n) return g;
  }
  // Unreachable over Q when the representation has no zero columns.
  throw std::logic_error("lefschetz: no full-support form found");
}

}  // namespace

LefschetzCertificate lefschetz_injective(const RepMatrix& m, int j,
                                         const std::optional<BElement>& g, std::uint64_t seed) {
  return lefschetz_injective(m, build_graded_basis(m), j, g, seed);
}

LefschetzCertificate lefschetz_injective(const RepMatrix& m, const GradedBasis& basis, int j,
                                         const std::optional<BElement>& g, std::uint64_t seed) {
  const int n = static_cast<int>(m.ground_size());
  if (j < 0 || 2 * j > n) throw std::invalid_argument("lefschetz: need 0 <= j <= m/2");

  LefschetzCertificate cert;
  if (g.has_value()) {
    if (support_size(*g) != n) throw std::invalid_argument("lefschetz: g must have full support");
    cert.multiplier = *g;
  } else {
    Rng rng(seed);
    cert.multiplier = sample_full_support_form(m, rng);
  }

  const BElement g_pow = power(cert.multiplier, n - 2 * j);
  SpanBasis image(static_cast<Index>(binomial(n, n - j).get_si()));
  for (const BElement& b : basis.levels[static_cast<std::size_t>(j)]) {
    image.insert(dense_coords(multiply(b, g_pow), n, n - j));
  }
  cert.domain_dim = static_cast<Index>(basis.levels[static_cast<std::size_t>(j)].size());
  cert.image_rank = image.size();
  cert.injective = cert.image_rank == cert.domain_dim;
  return cert;
}

namespace {

// Monomial basis of the degree-j piece of k[z_1..z_d] with an index lookup.
struct MonomialTable {
  std::vector<std::vector<int>> exps;
  std::map<std::vector<int>, int> index;
};

void gen_exponents(int d, int remaining, std::vector<int>& cur, MonomialTable& t) {
  if (static_cast<int>(cur.size()) == d - 1) {
    cur.push_back(remaining);
    t.index.emplace(cur, static_cast<int>(t.exps.size()));
    t.exps.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.push_back(e);
    gen_exponents(d, remaining - e, cur, t);
    cur.pop_back();
  }
}

MonomialTable monomials_of_degree(int d, int j) {
  MonomialTable t;
  std::vector<int> cur;
  gen_exponents(d, j, cur, t);
  return t;
}

// Coefficient vector of (p_1 z_1 + ... + p_d z_d)^e on degree-e monomials.
RatVector linear_power_coords(const RatVector& p, int e, const MonomialTable& table) {
  const int d = static_cast<int>(p.size());
  RatVector out = RatVector::Zero(static_cast<Index>(table.exps.size()));
  for (std::size_t idx = 0; idx < table.exps.size(); ++idx) {
    const std::vector<int>& gamma = table.exps[idx];
    Rational coeff(1);
    bool zero = false;
    for (int i = 0; i < d; ++i) {
      const int gi = gamma[static_cast<std::size_t>(i)];
      if (gi == 0) continue;
      if (p(i).is_zero()) {
        zero = true;
        break;
      }
      coeff *= pow(p(i), gi);
    }
    if (zero) continue;
    Integer multi(1);  // e! / prod(gamma_i!) as a product of binomials
    int used = 0;
    for (int i = 0; i < d; ++i) {
      const int gi = gamma[static_cast<std::size_t>(i)];
      multi *= binomial(used + gi, gi);
      used += gi;
    }
    out(static_cast<Index>(idx)) = coeff * Rational(multi);
  }
  return out;
}

}  // namespace

UniPoly hilbert_via_ideal(const RepMatrix& m, int samples_per_flat, std::uint64_t seed) {
  const int n = static_cast<int>(m.ground_size());
  const int d = static_cast<int>(m.dim());
  constexpr int kMaxRounds = 6;
  if (d == 0) return UniPoly({1});

  // Annihilator bases of the flats of rank < d.  A corank-1 stratum is a
  // single projective point, so one generator exhausts its contribution;
  // deeper strata are sampled, doubling per round.
  std::vector<std::vector<RatVector>> deep_strata;
  std::vector<RatVector> forced_generators;
  for (Mask f : flats(m)) {
    const Index r = rank_subset(m, f);
    if (r >= d) continue;
    std::vector<RatVector> basis = kernel_basis(columns_of(m.matrix(), f).transpose());
    if (basis.size() == 1) {
      forced_generators.push_back(basis.front());
    } else {
      deep_strata.push_back(std::move(basis));
    }
  }

  std::vector<MonomialTable> tables;
  tables.reserve(static_cast<std::size_t>(n) + 1);
  std::vector<SpanBasis> spans;
  std::vector<Index> propagated;  // rows of span j already multiplied into j+1
  for (int j = 0; j <= n; ++j) {
    tables.push_back(monomials_of_degree(d, j));
    spans.emplace_back(static_cast<Index>(tables.back().exps.size()));
    propagated.push_back(0);
  }

  // Index maps for multiplication by z_i, degree j -> j+1.
  std::vector<std::vector<std::vector<Index>>> shift(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j + 1 <= n; ++j) {
    shift[static_cast<std::size_t>(j)].assign(
        static_cast<std::size_t>(d), std::vector<Index>(tables[static_cast<std::size_t>(j)].exps.size()));
    for (std::size_t src = 0; src < tables[static_cast<std::size_t>(j)].exps.size(); ++src) {
      std::vector<int> exp = tables[static_cast<std::size_t>(j)].exps[src];
      for (int i = 0; i < d; ++i) {
        ++exp[static_cast<std::size_t>(i)];
        shift[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)][src] =
            tables[static_cast<std::size_t>(j) + 1].index.at(exp);
        --exp[static_cast<std::size_t>(i)];
      }
    }
  }

  auto insert_generator = [&](const RatVector& p) {
    BElement pm = linear_combination(m, p);
    if (pm.empty()) return;
    const int e = 1 + support_size(pm);
    if (e > n) return;  // degree beyond the reported range
    spans[static_cast<std::size_t>(e)].insert(
        linear_power_coords(p, e, tables[static_cast<std::size_t>(e)]));
  };

  auto propagate = [&]() {
    for (int j = 1; j < n; ++j) {
      SpanBasis& src = spans[static_cast<std::size_t>(j)];
      SpanBasis& dst = spans[static_cast<std::size_t>(j) + 1];
      while (propagated[static_cast<std::size_t>(j)] < src.size()) {
        const RatVector& row = src.row(propagated[static_cast<std::size_t>(j)]);
        for (int i = 0; i < d; ++i) {
          RatVector shifted = RatVector::Zero(dst.ambient_dim());
          for (Index s = 0; s < row.size(); ++s) {
            if (!row(s).is_zero()) {
              shifted(shift[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]
                           [static_cast<std::size_t>(s)]) = row(s);
            }
          }
          dst.insert(shifted);
        }
        ++propagated[static_cast<std::size_t>(j)];
      }
    }
  };

  auto current_dims = [&]() {
    std::vector<long long> dims(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 0; j <= n; ++j) {
      dims[static_cast<std::size_t>(j)] =
          static_cast<long long>(tables[static_cast<std::size_t>(j)].exps.size()) -
          spans[static_cast<std::size_t>(j)].size();
    }
    return dims;
  };

  Rng rng(seed);
  std::vector<long long> previous;
  int samples = samples_per_flat;
  for (int round = 0; round < kMaxRounds; ++round) {
    if (round == 0) {
      for (const RatVector& p : forced_generators) insert_generator(p);
    }
    for (const auto& basis : deep_strata) {
      for (int s = 0; s < samples; ++s) {
        const long bound = 3 + 2 * round;
        RatVector p = RatVector::Zero(d);
        bool nonzero = false;
        for (const RatVector& b : basis) {
          const long c = rng.uniform_int(-bound, bound);
          if (c == 0) continue;
          nonzero = true;
          for (Index i = 0; i < d; ++i) p(i) += Rational(c) * b(i);
        }
        if (!nonzero) {
          for (Index i = 0; i < d; ++i) p(i) = basis.front()(i);
        }
        insert_generator(p);
      }
    }
    propagate();
    std::vector<long long> dims = current_dims();
    if (round > 0 && dims == previous) return UniPoly(std::move(dims));
    previous = std::move(dims);
    samples *= 2;
  }
  throw std::runtime_error("hilbert_via_ideal: dimension vector failed to stabilize");
}

UniPoly hilbert_d2_closed_form(const RepMatrix& m) {
  if (m.dim() != 2) throw std::invalid_argument("hilbert_d2_closed_form: requires d = 2");
  const int n = static_cast<int>(m.ground_size());

  std::vector<long long> w(static_cast<std::size_t>(n) + 1, 0);
  for (Mask cls : parallel_classes(m)) {
    const int e = popcount(cls);
    const int idx = 1 + n - e;
    if (idx <= n) ++w[static_cast<std::size_t>(idx)];
  }

  std::vector<long long> dims(static_cast<std::size_t>(n) + 1, 0);
  for (int j = 0; j <= n; ++j) {
    long long v = j + 1;
    for (int i = 0; i <= j; ++i) v -= w[static_cast<std::size_t>(i)] * (j - i + 1);
    dims[static_cast<std::size_t>(j)] = v;
  }
  return UniPoly(std::move(dims));
}

}  // namespace matalg
