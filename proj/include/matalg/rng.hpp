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

#ifndef MATALG_RNG_HPP
#define MATALG_RNG_HPP

#include <cstdint>

namespace matalg {

/// splitmix64 stream.  Used instead of <random> engines plus distributions
/// so that seeded runs produce identical results on every platform and
/// standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi].  Modulo reduction; the bias is far below
  /// anything observable at the range sizes used here, and the sequence is
  /// platform-independent.
  long uniform_int(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next_u64() % span);
  }

  /// Uniform in [-bound, bound] excluding zero.
  long nonzero_int(long bound) {
    long v = uniform_int(1, 2 * bound);
    return v <= bound ? v : bound - v;  // 1..b -> positive, b+1..2b -> -1..-b
  }

 private:
  std::uint64_t state_;
};

}  // namespace matalg

#endif  // MATALG_RNG_HPP
