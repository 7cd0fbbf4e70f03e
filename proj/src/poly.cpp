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

#include "matalg/poly.hpp"

#include <sstream>

namespace matalg {

UniPoly UniPoly::monomial(long long coeff, int degree) {
  std::vector<long long> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = coeff;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::all_ones(int degree) {
  return UniPoly(std::vector<long long>(static_cast<std::size_t>(degree) + 1, 1));
}

long long UniPoly::eval_at_one() const {
  long long s = 0;
  for (long long v : c_) s += v;
  return s;
}

UniPoly UniPoly::shifted(int k) const {
  if (is_zero()) return UniPoly();
  std::vector<long long> c(static_cast<std::size_t>(k), 0);
  c.insert(c.end(), c_.begin(), c_.end());
  return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<long long> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] += b.c_[i];
  }
  return UniPoly(std::move(c));
}

namespace {

void append_term(std::ostringstream& os, bool& first, long long v, const std::string& vars) {
  if (v == 0) return;
  if (first) {
    if (v < 0) os << "-";
    first = false;
  } else {
    os << (v < 0 ? " - " : " + ");
  }
  long long a = v < 0 ? -v : v;
  if (a != 1 || vars.empty()) {
    os << a;
    if (!vars.empty()) os << "*";
  }
  os << vars;
}

std::string power_str(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

std::string UniPoly::pretty(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    append_term(os, first, c_[i], power_str(var, static_cast<int>(i)));
  }
  return os.str();
}

void BiPoly::add(int xd, int yd, long long v) {
  if (v == 0) return;
  Key k{xd, yd};
  auto [it, inserted] = c_.emplace(k, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) c_.erase(it);
  }
}

std::string BiPoly::pretty(const std::string& x, const std::string& y) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, v] : c_) {
    std::string xs = power_str(x, key.first);
    std::string ys = power_str(y, key.second);
    std::string vars = xs.empty() ? ys : (ys.empty() ? xs : xs + "*" + ys);
    append_term(os, first, v, vars);
  }
  return os.str();
}

}  // namespace matalg
