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

#include "matalg/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace matalg {

namespace {

// Strips comments and gathers whitespace-separated tokens.
std::vector<std::string> tokenize(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

long parse_count(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("malformed ") + what + ": '" + tok + "'");
  }
}

}  // namespace

RatMatrix parse_matrix(std::istream& in) {
  const std::vector<std::string> tokens = tokenize(in);
  if (tokens.size() < 2) throw ParseError("missing 'd m' header");
  const long d = parse_count(tokens[0], "row count");
  const long m = parse_count(tokens[1], "column count");
  if (d < 1 || m < 1 || d > m) throw ParseError("header requires 1 <= d <= m");
  if (m > kMaxGroundSize) throw ParseError("column count exceeds the supported maximum");
  if (static_cast<long>(tokens.size()) != 2 + d * m) {
    throw ParseError("expected " + std::to_string(d * m) + " entries, found " +
                     std::to_string(tokens.size() - 2));
  }
  RatMatrix mat(d, m);
  for (long i = 0; i < d; ++i) {
    for (long j = 0; j < m; ++j) {
      const std::string& tok = tokens[static_cast<std::size_t>(2 + i * m + j)];
      auto r = Rational::parse(tok);
      if (!r.has_value()) throw ParseError("malformed rational literal: '" + tok + "'");
      mat(i, j) = *r;
    }
  }
  return mat;
}

RepMatrix load_rep_matrix(std::istream& in) {
  RatMatrix mat = parse_matrix(in);
  try {
    return RepMatrix(mat);
  } catch (const std::invalid_argument& e) {
    throw RankError(e.what());
  }
}

RepMatrix load_rep_matrix_path(const std::string& path) {
  if (path == "-") return load_rep_matrix(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return load_rep_matrix(in);
}

Json to_json(const UniPoly& p) {
  Json arr = Json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i));
  if (p.is_zero()) arr.push_back(0);
  return arr;
}

Json to_json(const BiPoly& p) {
  Json arr = Json::array();
  for (const auto& [key, c] : p.terms()) {
    arr.push_back(Json::array({key.first, key.second, c}));
  }
  return arr;
}

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const EquivalenceWitness& w) {
  Json j;
  j["q"] = to_json(w.q);
  Json perm = Json::array();
  for (Index p : w.perm) perm.push_back(p);
  j["p_permutation"] = std::move(perm);
  Json scales = Json::array();
  for (const Rational& s : w.scale) scales.push_back(s.str());
  j["p_scales"] = std::move(scales);
  j["p"] = to_json(w.p_matrix());
  return j;
}

Json to_json(const LaurentPoly& p) {
  Json arr = Json::array();
  for (const auto& [e, v] : p.terms()) arr.push_back(Json::array({e, v.str()}));
  return arr;
}

Json to_json(const DenseMatrix<LaurentPoly>& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json scan_report_json(const ScanReport& report) {
  Json j;
  j["seed"] = report.seed;
  j["count"] = report.count;
  Json prof;
  prof["d"] = report.profile.dims;
  prof["m_min"] = report.profile.m_min;
  prof["m_max"] = report.profile.m_max;
  prof["entry_bound"] = report.profile.entry_bound;
  j["profile"] = std::move(prof);
  Json instances = Json::array();
  for (const ScanInstance& inst : report.instances) {
    Json ji;
    ji["index"] = inst.index;
    ji["d"] = inst.d;
    ji["m"] = inst.m;
    ji["matrix_hash"] = inst.matrix_hash;
    ji["hilbert"] = inst.hilbert;
    ji["log_concave"] = inst.log_concave;
    instances.push_back(std::move(ji));
  }
  j["instances"] = std::move(instances);
  Json violations = Json::array();
  for (const ScanViolation& v : report.violations) {
    Json jv;
    jv["index"] = v.index;
    jv["kind"] = v.kind;
    jv["matrix"] = v.matrix;
    violations.push_back(std::move(jv));
  }
  j["violations"] = std::move(violations);
  return j;
}

std::string scan_report_csv(const ScanReport& report) {
  std::ostringstream os;
  os << "index,d,m,hilbert,log_concave\n";
  for (const ScanInstance& inst : report.instances) {
    os << inst.index << "," << inst.d << "," << inst.m << ",";
    for (std::size_t i = 0; i < inst.hilbert.size(); ++i) {
      if (i) os << " ";
      os << inst.hilbert[i];
    }
    os << "," << (inst.log_concave ? 1 : 0) << "\n";
  }
  return os.str();
}

void atomic_write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("short write to '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename into '" + path + "'");
  }
}

}  // namespace matalg
