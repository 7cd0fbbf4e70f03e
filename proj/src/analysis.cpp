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

#include "matalg/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "matalg/rng.hpp"
#include "matalg/tutte.hpp"

namespace matalg {

BinomialDecomposition macaulay_decomposition(long long a, int j) {
  if (a < 1 || j < 1) throw std::invalid_argument("macaulay_decomposition: need a >= 1, j >= 1");
  BinomialDecomposition dec;
  dec.a = a;
  dec.j = j;
  Integer rem(static_cast<long>(a));
  int t = j;
  while (sgn(rem) > 0) {
    // Largest n with C(n, t) <= rem; C(t, t) = 1 <= rem keeps this well defined.
    long n = t;
    while (binomial(n + 1, t) <= rem) ++n;
    dec.parts.emplace_back(n, t);
    rem -= binomial(n, t);
    --t;
  }
  return dec;
}

Integer pseudopower(long long a, int j) {
  BinomialDecomposition dec = macaulay_decomposition(a, j);
  Integer s(0);
  for (const auto& [n, t] : dec.parts) s += binomial(n + 1, t + 1);
  return s;
}

BoundCheck macaulay_check(const UniPoly& hilbert, int d) {
  BoundCheck r;
  const int m = hilbert.degree();
  auto fail = [&](int idx, const std::string& why) {
    r.ok = false;
    r.first_violation = idx;
    r.reason = why;
    return r;
  };
  if (hilbert.coeff(0) != 1) return fail(0, "d_0 != 1");
  if (m >= 1 && hilbert.coeff(1) != d) return fail(1, "d_1 != d");
  if (hilbert.coeff(m) != 1) return fail(m, "d_m != 1");
  for (int j = 1; j <= m - 1; ++j) {
    const long long next = hilbert.coeff(j + 1);
    if (next <= 0) return fail(j + 1, "d_{j+1} not positive");
    if (Integer(static_cast<long>(next)) > pseudopower(hilbert.coeff(j), j)) {
      return fail(j + 1, "pseudopower bound exceeded");
    }
  }
  return r;
}

BoundCheck growth_check(const UniPoly& hilbert) {
  BoundCheck r;
  const int m = hilbert.degree();
  for (int j = 1; 2 * j <= m; ++j) {
    if (hilbert.coeff(j) < hilbert.coeff(j - 1)) {
      r.ok = false;
      r.first_violation = j;
      r.reason = "monotone prefix violated";
      return r;
    }
  }
  for (int j = 0; 2 * j <= m; ++j) {
    if (hilbert.coeff(j) > hilbert.coeff(m - j)) {
      r.ok = false;
      r.first_violation = j;
      r.reason = "d_j > d_{m-j}";
      return r;
    }
  }
  return r;
}

BoundCheck log_concavity_check(const UniPoly& hilbert) {
  BoundCheck r;
  const int m = hilbert.degree();
  for (int j = 0; j <= m; ++j) {
    if (hilbert.coeff(j) <= 0) {
      r.ok = false;
      r.first_violation = j;
      r.reason = "entry not positive";
      return r;
    }
  }
  for (int j = 1; j <= m - 1; ++j) {
    const long long c = hilbert.coeff(j);
    if (c * c < hilbert.coeff(j - 1) * hilbert.coeff(j + 1)) {
      r.ok = false;
      r.first_violation = j;
      r.reason = "d_j^2 < d_{j-1} d_{j+1}";
      return r;
    }
  }
  return r;
}

BoundCheck concave_differences_check(const UniPoly& hilbert) {
  BoundCheck r;
  const int m = hilbert.degree();
  for (int j = 1; j <= m - 1; ++j) {
    const long long left = hilbert.coeff(j) - hilbert.coeff(j - 1);
    const long long right = hilbert.coeff(j + 1) - hilbert.coeff(j);
    if (left < right) {
      r.ok = false;
      r.first_violation = j;
      r.reason = "first differences increase";
      return r;
    }
  }
  return r;
}

UniPoly uniform_hilbert(int d, int m) {
  if (d < 1 || d > m) throw std::invalid_argument("uniform_hilbert: need 1 <= d <= m");
  std::vector<long long> c(static_cast<std::size_t>(m) + 1, 0);
  for (int j = 0; j <= m; ++j) {
    const Integer a = binomial(d + j - 1, j);
    const Integer b = binomial(m, j);
    const Integer v = a < b ? a : b;
    c[static_cast<std::size_t>(j)] = static_cast<long long>(v.get_si());
  }
  return UniPoly(std::move(c));
}

WilsonResult wilson_det_check(int m, int j) {
  if (j < 0 || 2 * j > m) throw std::invalid_argument("wilson_det_check: need 0 <= 2j <= m");
  const std::vector<Mask> rows = subsets_of_size(m, m - j);
  const std::vector<Mask> cols = subsets_of_size(m, j);
  const Index n = static_cast<Index>(cols.size());

  RatMatrix w(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      const bool divides = (cols[static_cast<std::size_t>(c)] & rows[static_cast<std::size_t>(r)]) ==
                           cols[static_cast<std::size_t>(c)];
      w(r, c) = Rational(divides ? 1 : 0);
    }
  }

  WilsonResult out;
  const Rational det = determinant(w);
  out.det_abs = abs(det).numerator();  // integer matrix, integer determinant

  out.formula = Integer(1);
  for (int h = 0; h <= j; ++h) {
    const Integer base = binomial(m - j - h, j - h);
    const Integer exp = binomial(m, h) - binomial(m, h - 1);
    if (sgn(exp) < 0) throw std::logic_error("wilson_det_check: negative exponent");
    Integer powed;
    mpz_pow_ui(powed.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
    out.formula *= powed;
  }
  out.match = out.det_abs == out.formula;
  return out;
}

namespace {

bool indicator(bool b) { return b; }

DenseMatrix<LaurentPoly> laurent_zero(int n) {
  DenseMatrix<LaurentPoly> m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) m(i, k) = LaurentPoly(0);
  }
  return m;
}

DenseMatrix<LaurentPoly> laurent_mul(const DenseMatrix<LaurentPoly>& a,
                                     const DenseMatrix<LaurentPoly>& b) {
  const int n = static_cast<int>(a.rows());
  DenseMatrix<LaurentPoly> c = laurent_zero(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (b(k, j).is_zero()) continue;
        c(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return c;
}

DenseMatrix<LaurentPoly> laurent_sub(const DenseMatrix<LaurentPoly>& a,
                                     const DenseMatrix<LaurentPoly>& b) {
  DenseMatrix<LaurentPoly> c = a;
  for (Index i = 0; i < c.rows(); ++i) {
    for (Index j = 0; j < c.cols(); ++j) c(i, j) -= b(i, j);
  }
  return c;
}

bool laurent_equal(const DenseMatrix<LaurentPoly>& a, const DenseMatrix<LaurentPoly>& b) {
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

DenseMatrix<LaurentPoly> laurent_scale(const DenseMatrix<LaurentPoly>& a, int c) {
  DenseMatrix<LaurentPoly> out = a;
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = LaurentPoly(c) * a(i, j);
  }
  return out;
}

bool rat_commutes(const RatMatrix& h, const RatMatrix& a, int two) {
  RatMatrix lhs = h * a - a * h;
  RatMatrix rhs = a * Rational(two);
  return exactly_equal(lhs, rhs);
}

}  // namespace

Sl2Triple sl2_degeneration(int n, int r) {
  if (r < 1 || r > n || ((n - r) % 2) != 0) {
    throw std::invalid_argument("sl2_degeneration: need 1 <= r <= n with n = r (mod 2)");
  }
  Sl2Triple out;
  out.x = laurent_zero(n);
  out.y = laurent_zero(n);

  // Superdiagonal / subdiagonal of the n-dimensional irreducible triple,
  // with u attached to the entries at or before index lo and 1/u past
  // index hi.  Each X/Y entry pair carries cancelling exponents, so H
  // stays u-free, while every pole only acts on coordinates outside the
  // middle-r window [lo+1, hi].
  const int lo = (n - r) / 2;
  const int hi = (n + r) / 2;

  // Entries use 1-based indices i, j.
  for (int i = 1; i <= n; ++i) {
    const int j = i + 1;
    if (j <= n) {
      const int e = indicator(i <= lo) - indicator(j > hi);
      out.x(i - 1, j - 1) = LaurentPoly::term(Rational(i), e);
    }
    const int jy = i - 1;
    if (jy >= 1) {
      const int e = indicator(i > hi) - indicator(jy <= lo);
      out.y(i - 1, jy - 1) = LaurentPoly::term(Rational(n - jy), e);
    }
  }

  out.h = laurent_sub(laurent_mul(out.x, out.y), laurent_mul(out.y, out.x));

  out.h_constant_diagonal = true;
  for (int i = 0; i < n && out.h_constant_diagonal; ++i) {
    for (int j = 0; j < n && out.h_constant_diagonal; ++j) {
      if (i == j) {
        const LaurentPoly expect = LaurentPoly(Rational(n - 1 - 2 * i));
        if (!out.h(i, j).is_constant() || out.h(i, j) != expect) out.h_constant_diagonal = false;
      } else if (!out.h(i, j).is_zero()) {
        out.h_constant_diagonal = false;
      }
    }
  }

  out.commutator_x = laurent_equal(laurent_sub(laurent_mul(out.h, out.x), laurent_mul(out.x, out.h)),
                                   laurent_scale(out.x, 2));
  out.commutator_y = laurent_equal(laurent_sub(laurent_mul(out.h, out.y), laurent_mul(out.y, out.h)),
                                   laurent_scale(out.y, -2));

  // u = 0 restriction to the middle r coordinates (0-based window).
  const int w0 = (n - r) / 2;
  auto in_window = [&](int idx) { return idx >= w0 && idx < w0 + r; };
  out.window_invariant = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool neg = out.x(i, j).has_negative_exponent() || out.y(i, j).has_negative_exponent();
      if (neg && in_window(i) && in_window(j)) out.window_invariant = false;
    }
  }

  if (out.window_invariant) {
    // The restriction of H, not the commutator of the restrictions: products
    // routed through indices outside the window contribute u * 1/u terms
    // that survive in the full H but have no counterpart on the subspace.
    RatMatrix x0(r, r), y0(r, r), h0(r, r);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        x0(i, j) = out.x(w0 + i, w0 + j).at_zero();
        y0(i, j) = out.y(w0 + i, w0 + j).at_zero();
        h0(i, j) = out.h(w0 + i, w0 + j).at_zero();
      }
    }
    bool ok = true;
    for (int i = 0; i < r && ok; ++i) {
      for (int j = 0; j < r && ok; ++j) {
        const Rational expect = (i == j) ? Rational(r - 1 - 2 * i) : Rational(0);
        if (h0(i, j) != expect) ok = false;
      }
    }
    out.restriction_ok = ok && rat_commutes(h0, x0, 2) && rat_commutes(h0, y0, -2);
  }
  return out;
}

RepMatrix random_rep(int d, int m, std::uint64_t seed, int entry_bound, UniformityMode mode) {
  if (d > m || entry_bound < 1) throw std::invalid_argument("random_rep: bad parameters");
  Rng rng(seed);
  constexpr int kMaxAttempts = 50000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    RatMatrix mat(d, m);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < m; ++j) mat(i, j) = Rational(rng.uniform_int(-entry_bound, entry_bound));
    }
    bool zero_col = false;
    for (int j = 0; j < m && !zero_col; ++j) {
      bool all_zero = true;
      for (int i = 0; i < d; ++i) {
        if (!mat(i, j).is_zero()) {
          all_zero = false;
          break;
        }
      }
      zero_col = all_zero;
    }
    if (zero_col) continue;
    if (rank_of(mat) != d) continue;
    RepMatrix rep(mat);
    if (mode == UniformityMode::kUniformOnly && !is_uniform(rep)) continue;
    if (mode == UniformityMode::kNonUniformOnly && is_uniform(rep)) continue;
    return rep;
  }
  throw std::runtime_error("random_rep: rejection sampling exhausted its attempt budget");
}

std::string matrix_text(const RatMatrix& m) {
  std::ostringstream os;
  os << m.rows() << " " << m.cols() << "\n";
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << m(i, j).str();
    }
    os << "\n";
  }
  return os.str();
}

std::string matrix_hash(const RatMatrix& m) {
  const std::string text = matrix_text(m);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xf);
  return os.str();
}

namespace {

void scan_one(int index, const ScanProfile& profile, std::uint64_t seed, ScanInstance& out,
              std::string& error) {
  try {
    const std::uint64_t child_seed = seed ^ static_cast<std::uint64_t>(index);
    Rng rng(child_seed);
    const int d = profile.dims[static_cast<std::size_t>(rng.uniform_int(
        0, static_cast<long>(profile.dims.size()) - 1))];
    const int m_lo = std::max(d, profile.m_min);
    const int m = static_cast<int>(rng.uniform_int(m_lo, std::max(m_lo, profile.m_max)));
    RepMatrix rep = random_rep(d, m, rng.next_u64(), profile.entry_bound);

    out.index = index;
    out.d = d;
    out.m = static_cast<int>(rep.ground_size());
    out.matrix_hash = matrix_hash(rep.matrix());

    const UniPoly direct = hilbert_direct(rep);
    const UniPoly delcon = poincare_delcon(rep);
    if (direct != delcon) {
      error = "oracle mismatch on instance " + std::to_string(index) + "\n" +
              matrix_text(rep.matrix());
      return;
    }
    out.hilbert = direct.coeffs();

    if (!macaulay_check(direct, d).ok) {
      error = "macaulay bound failed (theorem violation) on instance " + std::to_string(index) +
              "\n" + matrix_text(rep.matrix());
      return;
    }
    if (!growth_check(direct).ok) {
      error = "growth bound failed (theorem violation) on instance " + std::to_string(index) +
              "\n" + matrix_text(rep.matrix());
      return;
    }
    if (d == 2) {
      if (hilbert_d2_closed_form(rep) != direct || !concave_differences_check(direct).ok) {
        error = "d = 2 closed form failed (theorem violation) on instance " +
                std::to_string(index) + "\n" + matrix_text(rep.matrix());
        return;
      }
    }
    out.log_concave = log_concavity_check(direct).ok;
    if (!out.log_concave) out.violating_matrix = matrix_text(rep.matrix());
  } catch (const std::exception& e) {
    error = std::string("scan instance ") + std::to_string(index) + ": " + e.what();
  }
}

}  // namespace

ScanReport scan_log_concavity(int count, const ScanProfile& profile, std::uint64_t seed,
                              int threads) {
  if (count < 0) throw std::invalid_argument("scan_log_concavity: negative count");
  if (count > 0 && profile.dims.empty()) {
    throw std::invalid_argument("scan_log_concavity: empty dimension profile");
  }
  const auto t0 = std::chrono::steady_clock::now();

  ScanReport report;
  report.seed = seed;
  report.count = count;
  report.profile = profile;
  report.instances.assign(static_cast<std::size_t>(count), ScanInstance{});
  std::vector<std::string> errors(static_cast<std::size_t>(count));

  const int workers = std::max(1, std::min(threads, count == 0 ? 1 : count));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) {
      scan_one(i, profile, seed, report.instances[static_cast<std::size_t>(i)],
               errors[static_cast<std::size_t>(i)]);
    }
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        for (int i = w; i < count; i += workers) {
          scan_one(i, profile, seed, report.instances[static_cast<std::size_t>(i)],
                   errors[static_cast<std::size_t>(i)]);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  for (const std::string& e : errors) {
    if (!e.empty()) throw std::logic_error(e);
  }
  for (const ScanInstance& inst : report.instances) {
    if (!inst.log_concave) {
      report.violations.push_back(ScanViolation{inst.index, "log-concavity", inst.violating_matrix});
    }
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::vector<CheckResult> run_theorem_battery(const RepMatrix& m, std::uint64_t seed) {
  std::vector<CheckResult> out;
  auto record = [&](const std::string& name, bool pass, const std::string& detail = "") {
    out.push_back(CheckResult{name, pass, detail});
  };

  const int d = static_cast<int>(m.dim());
  const int n = static_cast<int>(m.ground_size());

  const UniPoly direct = hilbert_direct(m);
  const UniPoly delcon = poincare_delcon(m);
  const UniPoly from_tutte = poincare_from_tutte(m);
  const UniPoly activity = hilbert_via_activity(m);
  const bool oracles = direct == delcon && delcon == from_tutte && from_tutte == activity;
  record("hilbert-cross-oracle", oracles,
         oracles ? direct.pretty() : "routes disagree: " + direct.pretty() + " vs " +
                                         delcon.pretty() + " vs " + from_tutte.pretty() + " vs " +
                                         activity.pretty());

  const DelConReport dc = delcon_identity_check(m);
  record("deletion-contraction-identity", dc.holds,
         dc.holds ? "all columns" : "failed at column " + std::to_string(dc.failed_column));

  const BoundCheck mac = macaulay_check(direct, d);
  record("macaulay-bounds", mac.ok, mac.ok ? "" : mac.reason);
  const BoundCheck gr = growth_check(direct);
  record("growth-bounds", gr.ok, gr.ok ? "" : gr.reason);

  bool lef = true;
  const GradedBasis basis = build_graded_basis(m);
  for (int j = 0; 2 * j <= n && lef; ++j) {
    lef = lefschetz_injective(m, basis, j, std::nullopt, seed).injective;
  }
  record("lefschetz-injectivity", lef, lef ? "all degrees" : "injectivity failed");

  const BoundCheck lc = log_concavity_check(direct);
  record("log-concavity", lc.ok, lc.ok ? "" : lc.reason);

  const bool uniform = is_uniform(m);
  const bool minor_vanish = has_vanishing_minor(m);
  bool uniform_ok;
  std::string uniform_detail;
  if (uniform) {
    uniform_ok = direct == uniform_hilbert(d, n) && !minor_vanish;
    uniform_detail = "uniform: closed form matches, all minors nonzero";
  } else {
    bool strict_somewhere = false;
    const UniPoly bound = uniform_hilbert(d, n);
    for (int j = 0; j <= n; ++j) {
      if (direct.coeff(j) < bound.coeff(j)) strict_somewhere = true;
      if (direct.coeff(j) > bound.coeff(j)) {
        strict_somewhere = false;
        break;
      }
    }
    uniform_ok = strict_somewhere && minor_vanish;
    uniform_detail = "non-uniform: strict gap and vanishing minor";
  }
  record("uniform-degeneracy-consistency", uniform_ok, uniform_detail);

  if (d == 2) {
    const bool closed = hilbert_d2_closed_form(m) == direct;
    record("d2-closed-form", closed, closed ? "" : "closed form disagrees");
    const BoundCheck cd = concave_differences_check(direct);
    record("d2-concave-differences", cd.ok, cd.ok ? "" : cd.reason);
  }
  return out;
}

}  // namespace matalg
