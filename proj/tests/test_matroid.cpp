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

#include <algorithm>

#include "matalg/analysis.hpp"
#include "matalg/matroid.hpp"
#include "test_support.hpp"

using namespace matalg;
using matalg::testing::mat_i;

namespace {

const RatMatrix kU32 = mat_i(2, 3, {1, 0, 1, 0, 1, 1});
const RatMatrix kParallel = mat_i(2, 4, {1, 0, 1, 1, 0, 1, 1, 1});

std::vector<int> mask_to_indices(Mask s) {
  std::vector<int> v;
  for (int j = 0; j < kMaxGroundSize; ++j) {
    if (mask_contains(s, j)) v.push_back(j);
  }
  return v;
}

// Lex-earliest basis by brute force: among independent subsets of S of full
// rank, the one whose sorted index sequence is smallest.
Mask brute_lex_basis(const RepMatrix& m, Mask s) {
  const Index r = rank_subset(m, s);
  Mask best = 0;
  bool have = false;
  for (Mask t = 0; t <= s; ++t) {
    if ((t & s) != t) continue;
    if (popcount(t) != r || !is_independent(m, t)) continue;
    if (!have || mask_to_indices(t) < mask_to_indices(best)) {
      best = t;
      have = true;
    }
  }
  return best;
}

bool brute_uniform(const RepMatrix& m) {
  const int d = static_cast<int>(m.dim());
  for (Mask s : subsets_of_size(static_cast<int>(m.ground_size()), d)) {
    if (!is_independent(m, s)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rank of column subsets") {
  RepMatrix m(kU32);
  CHECK(rank_subset(m, 0b011) == 2);
  CHECK(rank_subset(m, 0) == 0);
  RepMatrix par(mat_i(2, 4, {1, 0, 1, 1, 0, 1, 1, 1}));
  CHECK(rank_subset(par, 0b1100) == 1);  // parallel columns
}

TEST_CASE("closure") {
  RepMatrix m(kU32);
  CHECK(closure(m, 0b011) == 0b111);  // col 3 = col 1 + col 2
  CHECK(closure(m, 0) == 0);
  RepMatrix par(kParallel);
  CHECK(closure(par, 0b0100) == 0b1100);  // parallel pair
}

TEST_CASE("lex-earliest basis") {
  RepMatrix m(kU32);
  CHECK(lex_earliest_basis(m, 0b111) == 0b011);
  CHECK(lex_earliest_basis(m, 0) == 0);
  // The greedy runs over the subset itself; an independent subset is its
  // own earliest basis even when earlier columns lie in its span.
  CHECK(lex_earliest_basis(m, 0b110) == 0b110);
  CHECK(lex_earliest_basis(m, 0b101) == 0b101);
}

TEST_CASE("externally active sets") {
  RepMatrix m(kU32);
  CHECK(externally_active_set(m, 0b011) == 0b100);
  CHECK(external_activity(m, 0b011) == 1);
  CHECK(externally_active_set(m, 0b101) == 0);  // basis {1,3} is not displaced
  CHECK(externally_active_set(m, 0b001) == 0);  // closure(S) = S
}

TEST_CASE("parallel classes") {
  RepMatrix par(kParallel);
  const std::vector<Mask> classes = parallel_classes(par);
  REQUIRE(classes.size() == 3);
  CHECK(classes[0] == 0b0001);
  CHECK(classes[1] == 0b0010);
  CHECK(classes[2] == 0b1100);

  RepMatrix distinct(kU32);
  CHECK(parallel_classes(distinct).size() == 3);

  CHECK_THROWS_AS(RepMatrix(mat_i(2, 2, {1, 2, 1, 2})), std::invalid_argument);
}

TEST_CASE("zero columns are stripped with a recorded count") {
  RepMatrix m(mat_i(2, 3, {1, 0, 0, 0, 0, 1}));
  CHECK(m.ground_size() == 2);
  CHECK(m.stripped_zero_columns() == 1);
}

TEST_CASE("column deletion") {
  RepMatrix m(kU32);
  CHECK(exactly_equal(delete_column(m, 2).matrix(), mat_i(2, 2, {1, 0, 0, 1})));
  CHECK(exactly_equal(delete_column(m, 0).matrix(), mat_i(2, 2, {0, 1, 1, 1})));
  RepMatrix id(mat_i(2, 2, {1, 0, 0, 1}));
  CHECK_THROWS_AS(delete_column(id, 0), std::invalid_argument);  // coloop
}

TEST_CASE("column contraction") {
  RepMatrix m(kU32);
  RepMatrix c = contract_column(m, 2);  // pivot on the bottom row
  CHECK(exactly_equal(c.matrix(), mat_i(1, 2, {1, -1})));

  RepMatrix id(mat_i(2, 2, {1, 0, 0, 1}));
  CHECK(exactly_equal(contract_column(id, 1).matrix(), mat_i(1, 1, {1})));

  // Contraction can zero a parallel mate; the zero column is stripped.
  RepMatrix p(mat_i(2, 3, {1, 0, 0, 0, 1, 1}));
  RepMatrix cp = contract_column(p, 2);
  CHECK(cp.ground_size() == 1);
  CHECK(cp.stripped_zero_columns() == 1);
  CHECK(exactly_equal(cp.matrix(), mat_i(1, 1, {1})));
}

TEST_CASE("uniformity") {
  CHECK(is_uniform(RepMatrix(kU32)));
  CHECK(!is_uniform(RepMatrix(kParallel)));
  CHECK(is_uniform(RepMatrix(mat_i(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}))));
  CHECK(!has_vanishing_minor(RepMatrix(kU32)));
  CHECK(has_vanishing_minor(RepMatrix(kParallel)));
}

TEST_CASE("closure and basis invariants on the small grid family") {
  int checked = 0;
  for (int d = 1; d <= 2; ++d) {
    for (int m = d; m <= 4; ++m) {
      matalg::testing::for_each_grid_rep(d, m, [&](const RepMatrix& rep) {
        const Mask all = full_mask(static_cast<int>(rep.ground_size()));
        for (Mask s = 0; s <= all; ++s) {
          const Mask cl = closure(rep, s);
          CHECK((s & cl) == s);
          CHECK(closure(rep, cl) == cl);
          CHECK(rank_subset(rep, cl) == rank_subset(rep, s));

          const Mask basis = lex_earliest_basis(rep, s);
          CHECK(is_independent(rep, basis));
          CHECK((basis & s) == basis);
          CHECK(rank_subset(rep, basis) == rank_subset(rep, s));
          CHECK(basis == brute_lex_basis(rep, s));
        }
        ++checked;
      });
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("activity bijection: EA(S) empty iff S = I(S) + EA(I(S))") {
  auto check_rep = [](const RepMatrix& rep) {
    const Mask all = full_mask(static_cast<int>(rep.ground_size()));
    for (Mask s = 0; s <= all; ++s) {
      const Mask i = lex_earliest_basis(rep, s);
      const bool lhs = externally_active_set(rep, s) == 0;
      const bool rhs = s == (i | externally_active_set(rep, i));
      CHECK(lhs == rhs);
    }
  };
  check_rep(RepMatrix(kU32));
  check_rep(RepMatrix(kParallel));
  check_rep(RepMatrix(mat_i(3, 6, {1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 1})));
  check_rep(random_rep(3, 8, 99));
  check_rep(random_rep(4, 8, 100));
}

TEST_CASE("uniformity agrees with brute force and with the minor test") {
  for (int d = 1; d <= 3; ++d) {
    for (int m = d; m <= 5; ++m) {
      matalg::testing::for_each_grid_rep(d, m, [&](const RepMatrix& rep) {
        const bool u = is_uniform(rep);
        CHECK(u == brute_uniform(rep));
        if (rep.ground_size() > rep.dim()) {
          CHECK(u == !has_vanishing_minor(rep));
        }
      });
    }
  }
}

TEST_CASE("contraction drops the rank by exactly one") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RepMatrix rep = random_rep(3, 6, seed);
    for (Index j = 0; j < rep.ground_size(); ++j) {
      CHECK(contract_column(rep, j).dim() == rep.dim() - 1);
    }
  }
}

TEST_CASE("flats are exactly the closure-closed sets") {
  RepMatrix rep(kParallel);
  const std::vector<Mask> fl = flats(rep);
  for (Mask f : fl) CHECK(closure(rep, f) == f);
  // Every closure of any subset appears.
  const Mask all = full_mask(static_cast<int>(rep.ground_size()));
  for (Mask s = 0; s <= all; ++s) {
    const Mask cl = closure(rep, s);
    CHECK(std::find(fl.begin(), fl.end(), cl) != fl.end());
  }
}
