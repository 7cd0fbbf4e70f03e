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

#ifndef MATALG_LAURENT_HPP
#define MATALG_LAURENT_HPP

#include <map>
#include <string>

#include "matalg/rational.hpp"

namespace matalg {

/// Laurent polynomial in u with rational coefficients; exponents may be
/// negative.  No zero coefficients stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int n) {  // NOLINT: Eigen needs Scalar(0) / Scalar(1)
    if (n != 0) c_[0] = Rational(n);
  }
  LaurentPoly(const Rational& r) {  // NOLINT
    if (!r.is_zero()) c_[0] = r;
  }

  static LaurentPoly term(const Rational& coeff, int exponent);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
  bool has_negative_exponent() const { return !c_.empty() && c_.begin()->first < 0; }
  Rational coeff(int exponent) const;
  const std::map<int, Rational>& terms() const { return c_; }

  /// Evaluation at a rational point; u0 must be nonzero when negative
  /// exponents are present.
  Rational evaluate(const Rational& u0) const;

  /// Value at u = 0; throws std::domain_error on negative exponents.
  Rational at_zero() const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  std::string pretty(const std::string& var = "u") const;

 private:
  void add_term(int e, const Rational& v);
  std::map<int, Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace matalg

namespace Eigen {

template <>
struct NumTraits<matalg::LaurentPoly> : GenericNumTraits<matalg::LaurentPoly> {
  typedef matalg::LaurentPoly Real;
  typedef matalg::LaurentPoly NonInteger;
  typedef matalg::LaurentPoly Nested;
  static inline Real epsilon() { return matalg::LaurentPoly(0); }
  static inline Real dummy_precision() { return matalg::LaurentPoly(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 200,
    MulCost = 400
  };
};

}  // namespace Eigen

#endif  // MATALG_LAURENT_HPP
