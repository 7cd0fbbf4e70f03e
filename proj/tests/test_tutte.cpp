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
#include "matalg/matroid.hpp"
#include "matalg/rng.hpp"
#include "matalg/tutte.hpp"
#include "test_support.hpp"

using namespace matalg;
using matalg::testing::mat_i;
using matalg::testing::upoly;

namespace {

const RatMatrix kU32 = mat_i(2, 3, {1, 0, 1, 0, 1, 1});
const RatMatrix kParallel = mat_i(2, 4, {1, 0, 1, 1, 0, 1, 1, 1});

}  // namespace

TEST_CASE("poincare polynomial by deletion/contraction") {
  CHECK(poincare_delcon(RepMatrix(kU32)) == upoly({1, 2, 3, 1}));
  CHECK(poincare_delcon(RepMatrix(mat_i(1, 3, {1, 1, 1}))) == upoly({1, 1, 1, 1}));
  CHECK(poincare_delcon(RepMatrix(kParallel)) == upoly({1, 2, 3, 3, 1}));
}

TEST_CASE("tutte polynomial by the rank expansion") {
  BiPoly u32;
  u32.add(2, 0, 1);
  u32.add(1, 0, 1);
  u32.add(0, 1, 1);
  CHECK(tutte_rank_expansion(RepMatrix(kU32)) == u32);

  BiPoly coloop;
  coloop.add(1, 0, 1);
  CHECK(tutte_rank_expansion(RepMatrix(mat_i(1, 1, {1}))) == coloop);

  BiPoly par;  // x^2 + x + xy + y + y^2
  par.add(2, 0, 1);
  par.add(1, 0, 1);
  par.add(1, 1, 1);
  par.add(0, 1, 1);
  par.add(0, 2, 1);
  CHECK(tutte_rank_expansion(RepMatrix(kParallel)) == par);
}

TEST_CASE("poincare from the tutte specialization") {
  CHECK(poincare_from_tutte(RepMatrix(kU32)) == upoly({1, 2, 3, 1}));
  CHECK(poincare_from_tutte(RepMatrix(mat_i(1, 1, {1}))) == upoly({1, 1}));
  CHECK(poincare_from_tutte(RepMatrix(kParallel)) == upoly({1, 2, 3, 3, 1}));
}

TEST_CASE("hilbert function by external activity") {
  CHECK(hilbert_via_activity(RepMatrix(kU32)) == upoly({1, 2, 3, 1}));
  CHECK(hilbert_via_activity(RepMatrix(mat_i(2, 2, {1, 0, 0, 1}))) == upoly({1, 2, 1}));
  const UniPoly par = hilbert_via_activity(RepMatrix(kParallel));
  CHECK(par == upoly({1, 2, 3, 3, 1}));
  CHECK(par.eval_at_one() == 10);  // number of independent sets
}

TEST_CASE("value at one counts independent sets") {
  for (std::uint64_t seed = 10; seed < 30; ++seed) {
    RepMatrix rep = random_rep(3, 7, seed);
    CHECK(poincare_delcon(rep).eval_at_one() ==
          static_cast<long long>(independent_sets(rep).size()));
  }
}

TEST_CASE("tutte coefficients are nonnegative and matroid-invariant") {
  for (std::uint64_t seed = 40; seed < 60; ++seed) {
    RepMatrix rep = random_rep(3, 7, seed);
    const BiPoly t = tutte_rank_expansion(rep);
    for (const auto& [key, c] : t.terms()) {
      (void)key;
      CHECK(c > 0);
    }
  }
  // Same matroid, different representations: column scaling, and the
  // generic pair with equal independence structure.
  RepMatrix a(mat_i(2, 4, {1, 0, 1, 1, 0, 1, 1, 2}));
  RepMatrix b(mat_i(2, 4, {1, 0, 1, 1, 0, 1, 1, 3}));  // both U(4,2)
  CHECK(tutte_rank_expansion(a) == tutte_rank_expansion(b));
  RepMatrix scaled(mat_i(2, 3, {5, 0, 2, 0, -3, 2}));  // U32 with scaled columns
  CHECK(tutte_rank_expansion(scaled) == tutte_rank_expansion(RepMatrix(kU32)));
}

TEST_CASE("deletion/contraction identity holds for every column") {
  CHECK(delcon_identity_check(RepMatrix(kU32)).holds);
  CHECK(delcon_identity_check(RepMatrix(kParallel)).holds);
  CHECK(delcon_identity_check(RepMatrix(mat_i(2, 2, {1, 0, 0, 1}))).holds);  // all coloops
  for (std::uint64_t seed = 70; seed < 90; ++seed) {
    CHECK(delcon_identity_check(random_rep(1 + seed % 4, 6 + seed % 3, seed)).holds);
  }
}

TEST_CASE("triple oracle equality, exhaustive to m = 6 plus random to m = 9") {
  long long instances = 0;
  for (int d = 1; d <= 3; ++d) {
    for (int m = d; m <= 6; ++m) {
      matalg::testing::for_each_grid_rep(d, m, [&](const RepMatrix& rep) {
        const UniPoly a = poincare_delcon(rep);
        const UniPoly b = poincare_from_tutte(rep);
        const UniPoly c = hilbert_via_activity(rep);
        REQUIRE(a == b);
        REQUIRE(b == c);
        ++instances;
      });
    }
  }
  CHECK(instances > 10000);

  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(0x7e57 + i);
    const int d = 1 + static_cast<int>(rng.uniform_int(0, 3));
    const int m = d + static_cast<int>(rng.uniform_int(0, 9 - d));
    RepMatrix rep = random_rep(d, m, rng.next_u64());
    const UniPoly a = poincare_delcon(rep);
    REQUIRE(a == poincare_from_tutte(rep));
    REQUIRE(a == hilbert_via_activity(rep));
  }
}
