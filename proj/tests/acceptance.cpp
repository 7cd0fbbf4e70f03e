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

// Acceptance suite.  Prints one pass/fail line per criterion and exits
// nonzero when any criterion fails.
//
// The instance family shared by several criteria ("the suite") is:
//   - every d x m matrix with entries in {-1, 0, 1}, d <= 3, m <= 5, of
//     rank d with no zero column, deduplicated by the multiset of
//     sign-normalized columns (the only scalings available on that grid),
//   - plus 300 seeded random instances with d <= 4, m <= 9, |entries| <= 5.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "matalg/algebra.hpp"
#include "matalg/analysis.hpp"
#include "matalg/equiv.hpp"
#include "matalg/io.hpp"
#include "matalg/rng.hpp"
#include "matalg/tutte.hpp"
#include "test_support.hpp"

using namespace matalg;

namespace {

struct Suite {
  std::vector<RepMatrix> reps;
  std::vector<UniPoly> hilbert;  // filled by criterion 1
  std::size_t exhaustive_count = 0;
};

Suite build_suite() {
  Suite s;
  for (int d = 1; d <= 3; ++d) {
    for (int m = d; m <= 5; ++m) {
      matalg::testing::for_each_grid_rep(d, m, [&](const RepMatrix& rep) { s.reps.push_back(rep); });
    }
  }
  s.exhaustive_count = s.reps.size();
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng(0x5017e + i);
    const int d = 1 + static_cast<int>(rng.uniform_int(0, 3));
    const int m = d + static_cast<int>(rng.uniform_int(0, 9 - d));
    s.reps.push_back(random_rep(d, m, rng.next_u64(), 5));
  }
  return s;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  int failures = 0;
  auto criterion = [&](int num, const std::string& name,
                       const std::function<bool(std::string&)>& fn) {
    std::string detail;
    bool ok = false;
    try {
      ok = fn(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", num, name.c_str(),
                detail.empty() ? "" : " | ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  };

  Suite suite = build_suite();

  criterion(1, "cross-oracle hilbert equality over the exhaustive + random family",
            [&](std::string& detail) {
              const auto t0 = std::chrono::steady_clock::now();
              suite.hilbert.clear();
              suite.hilbert.reserve(suite.reps.size());
              for (const RepMatrix& rep : suite.reps) {
                const UniPoly direct = hilbert_direct(rep);
                if (direct != poincare_delcon(rep)) return false;
                if (direct != poincare_from_tutte(rep)) return false;
                if (direct != hilbert_via_activity(rep)) return false;
                suite.hilbert.push_back(direct);
              }
              const double elapsed = seconds_since(t0);
              std::ostringstream os;
              os << suite.reps.size() << " instances (" << suite.exhaustive_count
                 << " exhaustive) in " << elapsed << "s single-threaded";
              detail = os.str();
              return elapsed <= 300.0;
            });

  criterion(2, "deletion/contraction identity for every column of every instance",
            [&](std::string&) {
              for (std::size_t i = 0; i < suite.reps.size(); ++i) {
                const RepMatrix& rep = suite.reps[i];
                const UniPoly& p = suite.hilbert[i];
                for (Index j = 0; j < rep.ground_size(); ++j) {
                  const UniPoly del = poincare_of_rowspace(raw_delete(rep.matrix(), j));
                  const UniPoly con = poincare_of_rowspace(raw_contract(rep.matrix(), j));
                  if (p != del.shifted(1) + con) return false;
                }
              }
              return true;
            });

  criterion(3, "uniform closed form attained exactly on uniform matroids only",
            [&](std::string& detail) {
              int uniform_count = 0, nonuniform_count = 0;
              for (std::uint64_t i = 0; uniform_count < 50 && i < 200; ++i) {
                Rng rng(0xabcd00 + i);
                const int d = 1 + static_cast<int>(rng.uniform_int(0, 3));
                const int m = d + static_cast<int>(rng.uniform_int(0, 9 - d));
                RepMatrix rep = random_rep(d, m, rng.next_u64(), 5, UniformityMode::kUniformOnly);
                if (hilbert_direct(rep) != uniform_hilbert(d, static_cast<int>(rep.ground_size()))) {
                  return false;
                }
                ++uniform_count;
              }
              for (std::uint64_t i = 0; nonuniform_count < 50 && i < 400; ++i) {
                Rng rng(0xdcba00 + i);
                const int d = 2 + static_cast<int>(rng.uniform_int(0, 2));
                const int m = d + 1 + static_cast<int>(rng.uniform_int(0, 8 - d));
                RepMatrix rep =
                    random_rep(d, m, rng.next_u64(), 2, UniformityMode::kNonUniformOnly);
                const UniPoly h = hilbert_direct(rep);
                const UniPoly bound = uniform_hilbert(d, static_cast<int>(rep.ground_size()));
                bool strict = false;
                for (int j = 0; j <= h.degree(); ++j) {
                  if (h.coeff(j) > bound.coeff(j)) return false;
                  if (h.coeff(j) < bound.coeff(j)) strict = true;
                }
                if (!strict) return false;
                if (!has_vanishing_minor(rep)) return false;
                ++nonuniform_count;
              }
              std::ostringstream os;
              os << uniform_count << " uniform, " << nonuniform_count << " non-uniform";
              detail = os.str();
              return uniform_count >= 50 && nonuniform_count >= 50;
            });

  criterion(4, "d = 2 closed form, nonincreasing differences, log-concavity",
            [&](std::string& detail) {
              int count = 0;
              for (std::size_t i = 0; i < suite.reps.size(); ++i) {
                const RepMatrix& rep = suite.reps[i];
                if (rep.dim() != 2) continue;
                ++count;
                if (hilbert_d2_closed_form(rep) != suite.hilbert[i]) return false;
                if (!concave_differences_check(suite.hilbert[i]).ok) return false;
                if (!log_concavity_check(suite.hilbert[i]).ok) return false;
              }
              detail = std::to_string(count) + " instances with d = 2";
              return count > 0;
            });

  criterion(5, "power-map injectivity everywhere; inclusion determinant formula to m = 10",
            [&](std::string&) {
              for (std::size_t i = 0; i < suite.reps.size(); ++i) {
                const RepMatrix& rep = suite.reps[i];
                const GradedBasis basis = build_graded_basis(rep);
                const int n = static_cast<int>(rep.ground_size());
                for (int j = 0; 2 * j <= n; ++j) {
                  if (!lefschetz_injective(rep, basis, j, std::nullopt, 0x5eed + i).injective) {
                    return false;
                  }
                }
              }
              for (int m = 1; m <= 10; ++m) {
                for (int j = 0; 2 * j <= m; ++j) {
                  if (!wilson_det_check(m, j).match) return false;
                }
              }
              return true;
            });

  criterion(6, "macaulay and growth bounds on every hilbert vector; pseudopower recomputation",
            [&](std::string&) {
              for (std::size_t i = 0; i < suite.reps.size(); ++i) {
                if (!macaulay_check(suite.hilbert[i], static_cast<int>(suite.reps[i].dim())).ok) {
                  return false;
                }
                if (!growth_check(suite.hilbert[i]).ok) return false;
              }
              // Independent recomputation: search over strictly decreasing
              // part sequences instead of the greedy scan.
              std::function<bool(long long, int, long long,
                                 std::vector<std::pair<long long, int>>&)>
                  dfs = [&](long long rem, int t, long long upper,
                            std::vector<std::pair<long long, int>>& parts) {
                    if (rem == 0) return true;
                    if (t < 1) return false;
                    for (long long n = upper; n >= t; --n) {
                      const Integer c = binomial(static_cast<long>(n), t);
                      if (c > Integer(static_cast<long>(rem))) continue;
                      parts.emplace_back(n, t);
                      if (dfs(rem - static_cast<long long>(c.get_si()), t - 1, n - 1, parts)) {
                        return true;
                      }
                      parts.pop_back();
                    }
                    return false;
                  };
              for (long long a = 1; a <= 200; ++a) {
                for (int j = 1; j <= 8; ++j) {
                  const BinomialDecomposition dec = macaulay_decomposition(a, j);
                  std::vector<std::pair<long long, int>> parts;
                  if (!dfs(a, j, a + j, parts)) return false;
                  if (parts != dec.parts) return false;
                  Integer psi(0);
                  for (const auto& [n, t] : parts) psi += binomial(static_cast<long>(n + 1), t + 1);
                  if (psi != pseudopower(a, j)) return false;
                }
              }
              return true;
            });

  criterion(7, "sampled annihilator ideal reproduces the direct hilbert function (m <= 7)",
            [&](std::string& detail) {
              int count = 0;
              for (std::size_t i = 0; i < suite.reps.size(); ++i) {
                const RepMatrix& rep = suite.reps[i];
                if (rep.ground_size() > 7) continue;
                ++count;
                if (hilbert_via_ideal(rep, 4, 0x1dea + i) != suite.hilbert[i]) return false;
              }
              detail = std::to_string(count) + " instances";
              return count > 0;
            });

  criterion(8, "cross-ratio pair inequivalent; 100 transformed pairs verified equivalent",
            [&](std::string&) {
              RepMatrix a(matalg::testing::mat_i(2, 4, {1, 0, 1, 1, 0, 1, 1, 2}));
              RepMatrix b(matalg::testing::mat_i(2, 4, {1, 0, 1, 1, 0, 1, 1, 3}));
              if (hilbert_direct(a) != hilbert_direct(b)) return false;   // same hilbert
              if (tutte_rank_expansion(a) != tutte_rank_expansion(b)) return false;  // same matroid
              if (linearly_equivalent(a, b).has_value()) return false;   // yet inequivalent

              for (std::uint64_t i = 0; i < 100; ++i) {
                Rng rng(0x8e8e + i);
                const int d = 2 + static_cast<int>(rng.uniform_int(0, 2));
                const int m = d + static_cast<int>(rng.uniform_int(0, 8 - d));
                RepMatrix base = random_rep(d, m, rng.next_u64(), 5);

                RatMatrix q(d, d);
                do {
                  for (int r = 0; r < d; ++r) {
                    for (int c = 0; c < d; ++c) q(r, c) = Rational(rng.uniform_int(-5, 5));
                  }
                } while (determinant(q).is_zero());
                const Index cols = base.ground_size();
                std::vector<Index> perm(static_cast<std::size_t>(cols));
                for (Index k = 0; k < cols; ++k) perm[static_cast<std::size_t>(k)] = k;
                for (Index k = cols - 1; k > 0; --k) {
                  std::swap(perm[static_cast<std::size_t>(k)],
                            perm[static_cast<std::size_t>(rng.uniform_int(0, k))]);
                }
                RatMatrix p = RatMatrix::Zero(cols, cols);
                for (Index c = 0; c < cols; ++c) {
                  p(c, perm[static_cast<std::size_t>(c)]) =
                      Rational(rng.nonzero_int(5), rng.uniform_int(1, 3));
                }
                RepMatrix transformed(q * base.matrix() * p);
                auto witness = linearly_equivalent(base, transformed);
                if (!witness.has_value()) return false;
                if (!witness->verify(base, transformed)) return false;
              }
              return true;
            });

  criterion(9, "300-instance scan: log-concave throughout, deterministic, within budget",
            [&](std::string& detail) {
              const auto t0 = std::chrono::steady_clock::now();
              ScanProfile profile;
              profile.dims = {2, 3};
              profile.m_min = 4;
              profile.m_max = 8;
              const ScanReport r1 = scan_log_concavity(300, profile, 42, 4);
              const ScanReport r2 = scan_log_concavity(300, profile, 42, 4);
              const double elapsed = seconds_since(t0);
              std::ostringstream os;
              os << "two scans on 4 workers in " << elapsed << "s, " << r1.violations.size()
                 << " violations";
              detail = os.str();
              if (scan_report_json(r1) != scan_report_json(r2)) return false;
              if (!r1.violations.empty()) return false;
              return elapsed <= 600.0;
            });

  criterion(10, "sl2 degenerations: exact relations and the (5, 3) matrices",
            [&](std::string&) {
              for (int n = 1; n <= 9; ++n) {
                for (int r = (n % 2 == 0) ? 2 : 1; r <= n; r += 2) {
                  if (!sl2_degeneration(n, r).all_ok()) return false;
                }
              }
              const Sl2Triple t = sl2_degeneration(5, 3);
              if (t.x(0, 1) != LaurentPoly::term(Rational(1), 1)) return false;
              if (t.x(1, 2) != LaurentPoly(Rational(2))) return false;
              if (t.x(2, 3) != LaurentPoly(Rational(3))) return false;
              if (t.x(3, 4) != LaurentPoly::term(Rational(4), -1)) return false;
              if (t.y(1, 0) != LaurentPoly::term(Rational(4), -1)) return false;
              if (t.y(2, 1) != LaurentPoly(Rational(3))) return false;
              if (t.y(3, 2) != LaurentPoly(Rational(2))) return false;
              if (t.y(4, 3) != LaurentPoly::term(Rational(1), 1)) return false;
              for (int i = 0; i < 5; ++i) {
                if (t.h(i, i) != LaurentPoly(Rational(4 - 2 * i))) return false;
              }
              return true;
            });

  if (failures == 0) {
    std::printf("all %d criteria passed\n", 10);
  } else {
    std::printf("%d criteria failed\n", failures);
  }
  return failures;
}
