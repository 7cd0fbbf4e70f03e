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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matalg/analysis.hpp"
#include "matalg/io.hpp"
#include "matalg/rng.hpp"
#include "test_support.hpp"

using namespace matalg;
using matalg::testing::mat_i;
using matalg::testing::upoly;

namespace {

// Independent recomputation of the binomial decomposition: depth-first
// search over strictly decreasing part sequences.  The representation is
// unique, so the search must find exactly the greedy one.
bool dfs_decomposition(long long rem, int t, long long upper,
                       std::vector<std::pair<long long, int>>& parts) {
  if (rem == 0) return true;
  if (t < 1) return false;
  for (long long n = upper; n >= t; --n) {
    const Integer c = binomial(static_cast<long>(n), t);
    if (c > Integer(static_cast<long>(rem))) continue;
    parts.emplace_back(n, t);
    if (dfs_decomposition(rem - static_cast<long long>(c.get_si()), t - 1, n - 1, parts)) {
      return true;
    }
    parts.pop_back();
  }
  return false;
}

}  // namespace

TEST_CASE("pseudopowers") {
  CHECK(pseudopower(3, 1) == Integer(6));
  CHECK(pseudopower(3, 2) == Integer(4));
  CHECK(pseudopower(4, 2) == Integer(5));
  CHECK_THROWS_AS(pseudopower(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(pseudopower(1, 0), std::invalid_argument);
}

TEST_CASE("binomial decomposition: reconstruction, shape, uniqueness") {
  for (long long a = 1; a <= 200; ++a) {
    for (int j = 1; j <= 8; ++j) {
      const BinomialDecomposition dec = macaulay_decomposition(a, j);
      Integer sum(0);
      int prev_t = j + 1;
      long long prev_n = -1;
      for (const auto& [n, t] : dec.parts) {
        CHECK(t == prev_t - 1);  // consecutive parts step down by one
        CHECK(n >= t);
        CHECK(t > 0);
        if (prev_n >= 0) CHECK(n < prev_n);
        sum += binomial(static_cast<long>(n), t);
        prev_t = t;
        prev_n = n;
      }
      CHECK(sum == Integer(static_cast<long>(a)));

      std::vector<std::pair<long long, int>> parts;
      REQUIRE(dfs_decomposition(a, j, a + j, parts));
      CHECK(parts == dec.parts);
    }
  }
}

TEST_CASE("macaulay bound check") {
  CHECK(macaulay_check(upoly({1, 2, 3, 3, 1}), 2).ok);
  CHECK(macaulay_check(upoly({1, 2, 3, 1}), 2).ok);
  const BoundCheck bad = macaulay_check(upoly({1, 2, 4, 1}), 2);
  CHECK(!bad.ok);
  CHECK(bad.first_violation == 2);
}

TEST_CASE("growth check") {
  CHECK(growth_check(upoly({1, 2, 3, 3, 1})).ok);
  CHECK(growth_check(upoly({1, 2, 3, 4, 1})).ok);
  CHECK(!growth_check(upoly({1, 3, 2, 3, 1})).ok);
}

TEST_CASE("log-concavity check") {
  CHECK(log_concavity_check(upoly({1, 2, 3, 3, 1})).ok);
  CHECK(log_concavity_check(upoly({1, 2, 3, 4, 1})).ok);
  const BoundCheck bad = log_concavity_check(upoly({1, 3, 1, 3, 1}));
  CHECK(!bad.ok);
  CHECK(bad.first_violation == 2);
}

TEST_CASE("uniform matroid hilbert function") {
  CHECK(uniform_hilbert(2, 3) == upoly({1, 2, 3, 1}));
  CHECK(uniform_hilbert(2, 4) == upoly({1, 2, 3, 4, 1}));
  CHECK(uniform_hilbert(3, 3) == upoly({1, 3, 3, 1}));
  CHECK_THROWS_AS(uniform_hilbert(3, 2), std::invalid_argument);
}

TEST_CASE("inclusion-matrix determinant formula") {
  const WilsonResult w31 = wilson_det_check(3, 1);
  CHECK(w31.det_abs == Integer(2));
  CHECK(w31.formula == Integer(2));
  CHECK(w31.match);
  CHECK(wilson_det_check(2, 1).det_abs == Integer(1));
  CHECK(wilson_det_check(5, 0).det_abs == Integer(1));
  for (int m = 1; m <= 8; ++m) {
    for (int j = 0; 2 * j <= m; ++j) {
      CHECK(wilson_det_check(m, j).match);
    }
  }
  CHECK_THROWS_AS(wilson_det_check(3, 2), std::invalid_argument);
}

TEST_CASE("sl2 degeneration matches the displayed matrices at (5, 3)") {
  const Sl2Triple t = sl2_degeneration(5, 3);
  CHECK(t.x(0, 1) == LaurentPoly::term(Rational(1), 1));
  CHECK(t.x(1, 2) == LaurentPoly(Rational(2)));
  CHECK(t.x(2, 3) == LaurentPoly(Rational(3)));
  CHECK(t.x(3, 4) == LaurentPoly::term(Rational(4), -1));
  CHECK(t.y(1, 0) == LaurentPoly::term(Rational(4), -1));
  CHECK(t.y(2, 1) == LaurentPoly(Rational(3)));
  CHECK(t.y(3, 2) == LaurentPoly(Rational(2)));
  CHECK(t.y(4, 3) == LaurentPoly::term(Rational(1), 1));
  for (int i = 0; i < 5; ++i) CHECK(t.h(i, i) == LaurentPoly(Rational(4 - 2 * i)));
  CHECK(t.all_ok());
}

TEST_CASE("sl2 relations for all valid (n, r) up to 7") {
  for (int n = 1; n <= 7; ++n) {
    for (int r = n % 2 == 0 ? 2 : 1; r <= n; r += 2) {
      CAPTURE(n);
      CAPTURE(r);
      CHECK(sl2_degeneration(n, r).all_ok());
    }
  }
  // n = r: the plain irreducible representation, no poles anywhere.
  const Sl2Triple plain = sl2_degeneration(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(!plain.x(i, j).has_negative_exponent());
      CHECK(!plain.y(i, j).has_negative_exponent());
    }
  }
  CHECK_THROWS_AS(sl2_degeneration(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(sl2_degeneration(3, 5), std::invalid_argument);
  CHECK_THROWS_AS(sl2_degeneration(3, 0), std::invalid_argument);
}

TEST_CASE("sl2 relations specialize at random nonzero rational points") {
  Rng rng(0x51);
  for (auto [n, r] : {std::pair{7, 3}, std::pair{6, 4}, std::pair{5, 5}}) {
    const Sl2Triple t = sl2_degeneration(n, r);
    for (int trial = 0; trial < 3; ++trial) {
      const Rational u0(rng.nonzero_int(7), rng.uniform_int(1, 5));
      auto eval = [&](const DenseMatrix<LaurentPoly>& mm) {
        RatMatrix out(mm.rows(), mm.cols());
        for (Index i = 0; i < mm.rows(); ++i) {
          for (Index j = 0; j < mm.cols(); ++j) out(i, j) = mm(i, j).evaluate(u0);
        }
        return out;
      };
      const RatMatrix x = eval(t.x), y = eval(t.y), h = eval(t.h);
      CHECK(exactly_equal(x * y - y * x, h));
      CHECK(exactly_equal(h * x - x * h, RatMatrix(x * Rational(2))));
      CHECK(exactly_equal(h * y - y * h, RatMatrix(y * Rational(-2))));
    }
  }
}

TEST_CASE("random representations") {
  RepMatrix a = random_rep(2, 4, 1);
  RepMatrix b = random_rep(2, 4, 1);
  CHECK(exactly_equal(a.matrix(), b.matrix()));  // deterministic in the seed
  CHECK(a.dim() == 2);
  CHECK(a.ground_size() == 4);

  CHECK(is_uniform(random_rep(2, 5, 7, 5, UniformityMode::kUniformOnly)));
  CHECK(!is_uniform(random_rep(2, 5, 7, 3, UniformityMode::kNonUniformOnly)));
  CHECK_THROWS_AS(random_rep(3, 2, 1), std::invalid_argument);
}

TEST_CASE("scan: determinism, zero violations, empty case") {
  ScanProfile profile;
  profile.dims = {2, 3};
  profile.m_min = 4;
  profile.m_max = 7;

  const ScanReport r1 = scan_log_concavity(25, profile, 42, 4);
  const ScanReport r2 = scan_log_concavity(25, profile, 42, 1);
  CHECK(scan_report_json(r1) == scan_report_json(r2));  // thread-count independent
  CHECK(r1.violations.empty());
  CHECK(static_cast<int>(r1.instances.size()) == 25);
  for (const ScanInstance& inst : r1.instances) {
    CHECK(inst.log_concave);
    CHECK(!inst.hilbert.empty());
    CHECK(inst.hilbert.front() == 1);
    CHECK(inst.hilbert.back() == 1);
  }

  const ScanReport empty = scan_log_concavity(0, profile, 1, 4);
  CHECK(empty.instances.empty());
  CHECK(empty.violations.empty());
}

TEST_CASE("theorem battery passes on reference instances") {
  for (const RatMatrix& m :
       {mat_i(2, 3, {1, 0, 1, 0, 1, 1}), mat_i(2, 4, {1, 0, 1, 1, 0, 1, 1, 1}),
        mat_i(2, 4, {1, 0, 1, 1, 0, 1, 1, 2}), mat_i(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1})}) {
    for (const CheckResult& c : run_theorem_battery(RepMatrix(m))) {
      CAPTURE(c.name);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("matrix digests are stable and canonical") {
  const RatMatrix m = mat_i(2, 3, {1, 0, 1, 0, 1, 1});
  CHECK(matrix_hash(m) == matrix_hash(m));
  CHECK(matrix_hash(m) != matrix_hash(mat_i(2, 3, {1, 0, 1, 0, 1, 2})));
  CHECK(matrix_text(m) == "2 3\n1 0 1\n0 1 1\n");
}
