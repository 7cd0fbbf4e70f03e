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

#ifndef MATALG_RATIONAL_HPP
#define MATALG_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace matalg {

using Integer = mpz_class;

/// Exact rational scalar over arbitrary-precision integers.
///
/// Always stored in lowest terms with denominator > 0; every operation is
/// exact.  The class is a plain value type (no expression templates leak
/// out), which makes it usable as an Eigen scalar.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                  // NOLINT
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
  Rational(long long n) : v_(Integer(std::to_string(n))) {}  // NOLINT
  explicit Rational(const Integer& n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }

  /// Parses "p" or "p/q" with q > 0.  Returns nullopt on malformed input.
  static std::optional<Rational> parse(const std::string& text);

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
  }

  /// Canonical text form, "p" or "p/q" with q > 1.
  std::string str() const { return v_.get_str(); }

  double to_double() const { return v_.get_d(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    r.v_ = a.v_ + b.v_;
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    r.v_ = a.v_ - b.v_;
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    r.v_ = a.v_ * b.v_;
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    Rational r;
    r.v_ = a.v_ / b.v_;
    return r;
  }
  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend Rational abs(const Rational& a) {
    Rational r;
    r.v_ = ::abs(a.v_);
    return r;
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& a);

/// Exact binomial coefficient; 0 when k < 0 or k > n.
Integer binomial(long n, long k);

/// binomial() narrowed to long long; throws std::overflow_error if it does
/// not fit.
long long binomial_ll(long n, long k);

/// x^e for e >= 0.
Rational pow(const Rational& x, long e);

}  // namespace matalg

namespace Eigen {

template <>
struct NumTraits<matalg::Rational> : GenericNumTraits<matalg::Rational> {
  typedef matalg::Rational Real;
  typedef matalg::Rational NonInteger;
  typedef matalg::Rational Nested;
  static inline Real epsilon() { return matalg::Rational(0); }
  static inline Real dummy_precision() { return matalg::Rational(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

#endif  // MATALG_RATIONAL_HPP
