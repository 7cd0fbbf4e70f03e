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

#include "matalg/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

namespace matalg {

std::optional<Rational> Rational::parse(const std::string& raw) {
  // mpz string conversion rejects a leading '+'.
  const std::string text = (!raw.empty() && raw[0] == '+') ? raw.substr(1) : raw;
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  if (text[i] == '-') ++i;
  if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
    return std::nullopt;
  }
  std::size_t num_end = i;
  while (num_end < text.size() && std::isdigit(static_cast<unsigned char>(text[num_end]))) {
    ++num_end;
  }
  if (num_end == text.size()) {
    return Rational(Integer(text));
  }
  // Denominator part: "/digits", no sign (the format requires q > 0).
  if (text[num_end] != '/' || num_end + 1 == text.size()) return std::nullopt;
  std::size_t den_begin = num_end + 1;
  for (std::size_t k = den_begin; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) return std::nullopt;
  }
  Integer den(text.substr(den_begin));
  if (sgn(den) == 0) return std::nullopt;
  return Rational(Integer(text.substr(0, num_end)), den);
}

std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }

Integer binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

long long binomial_ll(long n, long k) {
  Integer b = binomial(n, k);
  if (!b.fits_slong_p()) throw std::overflow_error("binomial_ll: result too large");
  return static_cast<long long>(b.get_si());
}

Rational pow(const Rational& x, long e) {
  if (e < 0) throw std::domain_error("pow: negative exponent");
  Rational r(1);
  Rational base = x;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace matalg
