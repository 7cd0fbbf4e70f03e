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

// Command-line front end.
//
// Exit codes: 0 success / all checks pass, 1 negative verdict (inequivalent
// pair or a violation found), 2 usage or parse error, 3 internal assertion
// (oracle mismatch).

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "matalg/analysis.hpp"
#include "matalg/io.hpp"
#include "matalg/tutte.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

constexpr int kDirectAlgebraCap = 14;   // override with --force
constexpr int kRankExpansionCap = 20;   // hard: 2^m subsets

struct OracleMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

using matalg::Json;

int env_threads() {
  const char* v = std::getenv("MAL_THREADS");
  if (v == nullptr) return 4;
  const int n = std::atoi(v);
  return n >= 1 ? n : 1;
}

class Timer {
 public:
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Json& report, const std::string& out_path) {
  const std::string text = report.dump(2) + "\n";
  if (!out_path.empty()) matalg::atomic_write_file(out_path, text);
  std::cout << text;
}

Json input_json(const matalg::RepMatrix& m) {
  Json j;
  j["digest"] = matalg::matrix_hash(m.matrix());
  j["d"] = m.dim();
  j["m"] = m.ground_size();
  j["stripped_zero_columns"] = m.stripped_zero_columns();
  return j;
}

void require_direct_cap(const matalg::RepMatrix& m, bool force) {
  if (!force && m.ground_size() > kDirectAlgebraCap) {
    throw CLI::ValidationError("m exceeds the default cap of " +
                               std::to_string(kDirectAlgebraCap) + "; pass --force to override");
  }
}

int cmd_hilbert(const std::string& file, const std::string& method, int samples,
                std::uint64_t seed, bool pretty, bool force, const std::string& out_path) {
  Timer timer;
  matalg::RepMatrix m = matalg::load_rep_matrix_path(file);
  require_direct_cap(m, force);

  Json result;
  std::optional<matalg::UniPoly> reference;
  auto add = [&](const std::string& name, const matalg::UniPoly& p) {
    result[name] = matalg::to_json(p);
    if (pretty) result[name + "_pretty"] = p.pretty();
    if (reference.has_value() && *reference != p) {
      throw OracleMismatch("hilbert routes disagree: " + reference->pretty() + " vs " +
                           p.pretty() + " (" + name + ")");
    }
    if (!reference.has_value()) reference = p;
  };

  if (method == "direct" || method == "all") add("direct", matalg::hilbert_direct(m));
  if (method == "delcon" || method == "all") add("delcon", matalg::poincare_delcon(m));
  if (method == "activity" || method == "all") add("activity", matalg::hilbert_via_activity(m));
  if (method == "tutte" || method == "all") add("tutte", matalg::poincare_from_tutte(m));
  if (method == "ideal" || method == "all") {
    add("ideal", matalg::hilbert_via_ideal(m, samples, seed));
  }

  Json report;
  report["command"] = "hilbert";
  report["input"] = input_json(m);
  report["result"] = std::move(result);
  report["elapsed_ms"] = timer.elapsed_ms();
  emit(report, out_path);
  return 0;
}

int cmd_tutte(const std::string& file, bool pretty, const std::string& out_path) {
  Timer timer;
  matalg::RepMatrix m = matalg::load_rep_matrix_path(file);
  if (m.ground_size() > kRankExpansionCap) {
    throw CLI::ValidationError("m exceeds the rank-expansion cap of " +
                               std::to_string(kRankExpansionCap));
  }

  const matalg::BiPoly t = matalg::tutte_rank_expansion(m);
  const matalg::UniPoly p = matalg::poincare_from_tutte(m);

  Json result;
  result["tutte"] = matalg::to_json(t);
  result["poincare"] = matalg::to_json(p);
  if (pretty) {
    result["tutte_pretty"] = t.pretty();
    result["poincare_pretty"] = p.pretty();
  }

  Json report;
  report["command"] = "tutte";
  report["input"] = input_json(m);
  report["result"] = std::move(result);
  report["elapsed_ms"] = timer.elapsed_ms();
  emit(report, out_path);
  return 0;
}

int cmd_equiv(const std::string& file_a, const std::string& file_b, bool force,
              const std::string& out_path) {
  Timer timer;
  matalg::RepMatrix a = matalg::load_rep_matrix_path(file_a);
  matalg::RepMatrix b = matalg::load_rep_matrix_path(file_b);
  require_direct_cap(a, force);
  require_direct_cap(b, force);

  Json result;
  int code = 0;
  if (a.dim() != b.dim() || a.ground_size() != b.ground_size()) {
    result["equivalent"] = false;
    result["reason"] = "shape";
    code = kExitViolation;
  } else {
    const matalg::IsomorphismResult iso = matalg::algebras_isomorphic(a, b);
    result["equivalent"] = iso.isomorphic;
    if (iso.isomorphic) {
      if (!iso.witness->verify(a, b)) throw OracleMismatch("witness failed verification");
      result["witness"] = matalg::to_json(*iso.witness);
    } else {
      result["reason"] = "no witness";
      code = kExitViolation;
    }
  }

  Json report;
  report["command"] = "equiv";
  Json inputs;
  inputs["a"] = input_json(a);
  inputs["b"] = input_json(b);
  report["input"] = std::move(inputs);
  report["result"] = std::move(result);
  report["elapsed_ms"] = timer.elapsed_ms();
  emit(report, out_path);
  return code;
}

int cmd_check(const std::string& file, std::uint64_t seed, bool force,
              const std::string& out_path) {
  Timer timer;
  matalg::RepMatrix m = matalg::load_rep_matrix_path(file);
  require_direct_cap(m, force);

  const std::vector<matalg::CheckResult> battery = matalg::run_theorem_battery(m, seed);
  bool all_pass = true;
  bool oracle_fail = false;
  Json checks = Json::array();
  for (const matalg::CheckResult& c : battery) {
    Json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
    if (!c.pass) {
      all_pass = false;
      if (c.name == "hilbert-cross-oracle") oracle_fail = true;
    }
  }

  Json report;
  report["command"] = "check";
  report["input"] = input_json(m);
  Json result;
  result["pass"] = all_pass;
  result["checks"] = std::move(checks);
  report["result"] = std::move(result);
  report["elapsed_ms"] = timer.elapsed_ms();
  emit(report, out_path);
  if (oracle_fail) return kExitInternal;
  return all_pass ? 0 : kExitViolation;
}

matalg::ScanProfile parse_profile(const std::string& d_spec, const std::string& m_spec,
                                  int entry_bound) {
  matalg::ScanProfile profile;
  profile.entry_bound = entry_bound;
  profile.dims.clear();
  std::istringstream ds(d_spec);
  std::string tok;
  while (std::getline(ds, tok, ',')) {
    if (tok.empty()) continue;
    profile.dims.push_back(std::stoi(tok));
  }
  if (profile.dims.empty()) throw CLI::ValidationError("--d needs at least one dimension");

  const auto dots = m_spec.find("..");
  if (dots == std::string::npos) {
    profile.m_min = profile.m_max = std::stoi(m_spec);
  } else {
    profile.m_min = std::stoi(m_spec.substr(0, dots));
    profile.m_max = std::stoi(m_spec.substr(dots + 2));
  }
  if (profile.m_min > profile.m_max || profile.m_max > kDirectAlgebraCap) {
    throw CLI::ValidationError("--m range invalid or above the cap of " +
                               std::to_string(kDirectAlgebraCap));
  }
  for (int d : profile.dims) {
    if (d < 1 || d > profile.m_max) throw CLI::ValidationError("--d out of range");
  }
  return profile;
}

int cmd_scan(int count, const std::string& d_spec, const std::string& m_spec, int entry_bound,
             std::uint64_t seed, const std::string& out_path, const std::string& csv_path) {
  Timer timer;
  const matalg::ScanProfile profile = parse_profile(d_spec, m_spec, entry_bound);
  const matalg::ScanReport scan = matalg::scan_log_concavity(count, profile, seed, env_threads());

  const Json deterministic = matalg::scan_report_json(scan);
  if (!out_path.empty()) matalg::atomic_write_file(out_path, deterministic.dump(2) + "\n");
  if (!csv_path.empty()) matalg::atomic_write_file(csv_path, matalg::scan_report_csv(scan));

  Json report;
  report["command"] = "scan";
  report["result"] = deterministic;
  report["elapsed_ms"] = timer.elapsed_ms();
  std::cout << report.dump(2) << "\n";
  return 0;
}

int cmd_sl2(int n, int r, const std::string& out_path) {
  Timer timer;
  matalg::Sl2Triple triple;
  try {
    triple = matalg::sl2_degeneration(n, r);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(e.what());
  }

  Json result;
  result["x"] = matalg::to_json(triple.x);
  result["y"] = matalg::to_json(triple.y);
  result["h"] = matalg::to_json(triple.h);
  result["h_constant_diagonal"] = triple.h_constant_diagonal;
  result["commutator_x"] = triple.commutator_x;
  result["commutator_y"] = triple.commutator_y;
  result["window_invariant"] = triple.window_invariant;
  result["restriction_ok"] = triple.restriction_ok;

  Json report;
  report["command"] = "sl2";
  Json input;
  input["n"] = n;
  input["r"] = r;
  report["input"] = std::move(input);
  report["result"] = std::move(result);
  report["elapsed_ms"] = timer.elapsed_ms();
  emit(report, out_path);
  if (!triple.all_ok()) {
    std::cerr << "sl2 relations failed verification\n";
    return kExitInternal;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constructions over column matroids: graded subalgebras of "
               "k[x_1..x_m]/(x_i^2), their Hilbert functions, Tutte specializations, "
               "equivalence of representations, and numerical scans"};
  app.require_subcommand(1);

  std::string file, file_b, out_path, csv_path;
  std::string method = "all";
  std::uint64_t seed = 42;
  int samples = 4;
  bool pretty = false, force = false;

  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert function of A(M)");
  hilbert->add_option("file", file, "matrix file, or - for stdin")->required();
  hilbert->add_option("--method", method, "direct|delcon|activity|tutte|ideal|all")
      ->check(CLI::IsMember({"direct", "delcon", "activity", "tutte", "ideal", "all"}));
  hilbert->add_option("--samples", samples, "ideal-route samples per flat per round");
  hilbert->add_option("--seed", seed, "seed for the ideal-route sampling");
  hilbert->add_flag("--pretty", pretty, "include rendered polynomials");
  hilbert->add_flag("--force", force, "override the size cap");
  hilbert->add_option("--out", out_path, "also write the report to a file");

  CLI::App* tutte = app.add_subcommand("tutte", "Tutte polynomial and its Poincare specialization");
  tutte->add_option("file", file)->required();
  tutte->add_flag("--pretty", pretty);
  tutte->add_option("--out", out_path);

  CLI::App* equiv = app.add_subcommand("equiv", "decide linear equivalence of two representations");
  equiv->add_option("file_a", file)->required();
  equiv->add_option("file_b", file_b)->required();
  equiv->add_flag("--force", force);
  equiv->add_option("--out", out_path);

  CLI::App* check = app.add_subcommand("check", "run the full theorem battery on one instance");
  check->add_option("file", file)->required();
  check->add_option("--seed", seed);
  check->add_flag("--force", force);
  check->add_option("--out", out_path);

  int count = 0, entry_bound = 5, sl2_n = 0, sl2_r = 0;
  std::string d_spec = "2,3", m_spec = "4..8";
  CLI::App* scan = app.add_subcommand("scan", "random scan for log-concavity of Hilbert functions");
  scan->add_option("--count", count, "number of instances")->required();
  scan->add_option("--d", d_spec, "comma-separated dimensions, e.g. 2,3");
  scan->add_option("--m", m_spec, "ground-set size or range, e.g. 4..8");
  scan->add_option("--entry-bound", entry_bound, "entries drawn from [-b, b]");
  scan->add_option("--seed", seed);
  scan->add_option("--out", out_path, "write the deterministic report JSON");
  scan->add_option("--csv", csv_path, "write a CSV of (d, m, hilbert, flags)");

  CLI::App* sl2 = app.add_subcommand("sl2", "degenerated sl2 triple X, Y, H over Laurent polynomials");
  sl2->add_option("--n", sl2_n, "matrix size")->required();
  sl2->add_option("--r", sl2_r, "restricted dimension (same parity as n)")->required();
  sl2->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
    if (hilbert->parsed()) return cmd_hilbert(file, method, samples, seed, pretty, force, out_path);
    if (tutte->parsed()) return cmd_tutte(file, pretty, out_path);
    if (equiv->parsed()) return cmd_equiv(file, file_b, force, out_path);
    if (check->parsed()) return cmd_check(file, seed, force, out_path);
    if (scan->parsed()) return cmd_scan(count, d_spec, m_spec, entry_bound, seed, out_path, csv_path);
    if (sl2->parsed()) return cmd_sl2(sl2_n, sl2_r, out_path);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  } catch (const matalg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const matalg::RankError& e) {
    std::cerr << "rank error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OracleMismatch& e) {
    std::cerr << "internal assertion: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::logic_error& e) {
    std::cerr << "internal assertion: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
