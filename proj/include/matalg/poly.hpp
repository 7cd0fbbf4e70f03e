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

#ifndef MATALG_POLY_HPP
#define MATALG_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace matalg {

/// Integer-coefficient polynomial in one variable, dense ascending
/// coefficients with no trailing zeros.  The zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly monomial(long long coeff, int degree);
  static UniPoly all_ones(int degree);  // 1 + t + ... + t^degree

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  long long coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : 0;
  }
  const std::vector<long long>& coeffs() const { return c_; }

  long long eval_at_one() const;

  UniPoly shifted(int k) const;  // multiply by t^k

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  /// Human form, e.g. "1 + 2t + 3t^2".
  std::string pretty(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<long long> c_;
};

/// Integer-coefficient polynomial in two variables, sparse map keyed by
/// (x-degree, y-degree).  No zero coefficients stored.
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;

  long long coeff(int xd, int yd) const {
    auto it = c_.find(Key{xd, yd});
    return it == c_.end() ? 0 : it->second;
  }
  void add(int xd, int yd, long long v);
  const std::map<Key, long long>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  std::string pretty(const std::string& x = "x", const std::string& y = "y") const;

 private:
  std::map<Key, long long> c_;
};

}  // namespace matalg

#endif  // MATALG_POLY_HPP
