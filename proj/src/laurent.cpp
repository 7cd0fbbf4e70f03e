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

#include "matalg/laurent.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace matalg {

LaurentPoly LaurentPoly::term(const Rational& coeff, int exponent) {
  LaurentPoly p;
  if (!coeff.is_zero()) p.c_[exponent] = coeff;
  return p;
}

Rational LaurentPoly::coeff(int exponent) const {
  auto it = c_.find(exponent);
  return it == c_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::evaluate(const Rational& u0) const {
  Rational s(0);
  for (const auto& [e, v] : c_) {
    if (e >= 0) {
      s += v * pow(u0, e);
    } else {
      if (u0.is_zero()) throw std::domain_error("LaurentPoly: evaluating a pole at u = 0");
      s += v * pow(u0.inverse(), -e);
    }
  }
  return s;
}

Rational LaurentPoly::at_zero() const {
  if (has_negative_exponent()) throw std::domain_error("LaurentPoly: pole at u = 0");
  return coeff(0);
}

void LaurentPoly::add_term(int e, const Rational& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = c_.emplace(e, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) c_.erase(it);
  }
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, v] : b.c_) r.add_term(e, v);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, v] : b.c_) r.add_term(e, -v);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, va] : a.c_) {
    for (const auto& [eb, vb] : b.c_) r.add_term(ea + eb, va * vb);
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) r.c_[e] = -v;
  return r;
}

std::string LaurentPoly::pretty(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : c_) {
    if (first) {
      if (v.sign() < 0) os << "-";
      first = false;
    } else {
      os << (v.sign() < 0 ? " - " : " + ");
    }
    Rational a = abs(v);
    std::string vars;
    if (e == 1) {
      vars = var;
    } else if (e != 0) {
      vars = var + "^" + std::to_string(e);
    }
    if (a != Rational(1) || vars.empty()) {
      os << a.str();
      if (!vars.empty()) os << "*";
    }
    os << vars;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.pretty(); }

}  // namespace matalg
