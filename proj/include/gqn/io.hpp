// Copyright 2026 The gqn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// StateDocument JSON files and scan CSV output.
//
// {
//   "format_version": 1,
//   "modes": m,
//   "matrix": [[...2m numbers...], ... 2m rows ...],
//   "partition": [{"label": "A1", "mode_indices": [0, 1]}, ...],
//   "metadata": {...}
// }

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gqn/core.hpp"
#include "gqn/measures.hpp"

namespace gqn {

inline constexpr int kFormatVersion = 1;

struct StateDocument {
  PartitionedState state;
  nlohmann::json metadata = nlohmann::json::object();
};

struct ReadResult {
  StateDocument document;
  Validation validation;
  // Set when validation found the matrix unphysical and strict was off.
  bool unphysical_warning = false;
};

nlohmann::json to_json(const StateDocument& doc);
/// Throws ErrorKind::Parse with a JSON pointer to the offending element.
StateDocument state_from_json(const nlohmann::json& j);

std::string dump_state(const StateDocument& doc);
ReadResult parse_state(std::string_view text,
                       double tol = kDefaultPhysicalityTol,
                       bool strict = false);

void write_state(const StateDocument& doc, const std::filesystem::path& path);
ReadResult read_state(const std::filesystem::path& path,
                      double tol = kDefaultPhysicalityTol, bool strict = false);

struct ScanRow {
  double b = 0.0;
  double mutual_information = 0.0;
  std::vector<double> residuals;
  double v_minus = 0.0;
  double v_plus = 0.0;
};

/// Header b,I,residual_1..residual_k,v_minus,v_plus; '.' decimals, LF.
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

/// %.17g formatting used by the text and CSV writers.
std::string format_double(double x);
// 10 significant digits, for human-facing summaries.
std::string format_short(double x);

}  // namespace gqn
