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

#ifndef MATALG_IO_HPP
#define MATALG_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "matalg/analysis.hpp"
#include "matalg/equiv.hpp"
#include "matalg/matroid.hpp"
#include "matalg/poly.hpp"

namespace matalg {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RankError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Matrix file format: a header line "d m", then d whitespace-separated
/// rows of m rational literals ("p" or "p/q", q > 0).  Lines starting with
/// '#' are comments.  Throws ParseError on malformed input.
RatMatrix parse_matrix(std::istream& in);

/// parse_matrix plus the full-row-rank check; throws RankError when the
/// parsed matrix does not have rank d.
RepMatrix load_rep_matrix(std::istream& in);

/// Reads a path, or standard input when the path is "-".
RepMatrix load_rep_matrix_path(const std::string& path);

Json to_json(const UniPoly& p);
Json to_json(const BiPoly& p);
Json to_json(const RatMatrix& m);
Json to_json(const EquivalenceWitness& w);
Json to_json(const LaurentPoly& p);
Json to_json(const DenseMatrix<LaurentPoly>& m);
Json scan_report_json(const ScanReport& report);          // deterministic (no timing)
std::string scan_report_csv(const ScanReport& report);    // d, m, hilbert, flags

/// Writes through a temp file in the same directory plus rename, so the
/// destination is never observed half-written.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace matalg

#endif  // MATALG_IO_HPP
