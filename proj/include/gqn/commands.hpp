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

// Command implementations behind the gqn executable. Each returns the
// process exit code and writes human output to `out`, diagnostics to `err`.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gqn/io.hpp"
#include "gqn/networks.hpp"
#include "gqn/witnesses.hpp"

namespace gqn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitExcluded = 1;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitUnphysical = 3;

/// GQN_DEFAULT_TOL when set to a positive number, otherwise `fallback`.
double default_tolerance(double fallback);

struct CheckOptions {
  std::string path;
  std::optional<double> tol;
};
int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err);

struct WitnessOptions {
  std::string path;
  std::string topology;
  std::optional<std::size_t> sources;
  std::optional<double> tol;
  double residual_tol = kDefaultResidualTol;
  bool json = false;
};
int cmd_witness(const WitnessOptions& opts, std::ostream& out,
                std::ostream& err);
nlohmann::json report_to_json(const WitnessReport& report);

struct GenerateOptions {
  std::string topology;
  std::optional<std::size_t> sources;
  std::optional<double> squeeze;
  std::vector<double> squeeze_list;
  double noise = 1.0;
  double rmax = 0.5;
  std::uint64_t seed = 0;
  bool identity_locals = false;
  std::string output;  // empty: stdout
};
int cmd_generate(const GenerateOptions& opts, std::ostream& out,
                 std::ostream& err);

/// Builds the document cmd_generate writes.
StateDocument generate_document(const GenerateOptions& opts);

struct SymmetricOptions {
  std::size_t modes = 0;
  double b = 1.0;
  bool pure = false;
  std::optional<double> e1;
  std::optional<double> e2;
  std::string partition;  // comma-separated party sizes; empty: one per mode
  std::string output;
};
int cmd_symmetric(const SymmetricOptions& opts, std::ostream& out,
                  std::ostream& err);

struct ScanOptions {
  std::size_t modes = 0;
  std::string partition;
  double b_from = 1.0;
  double b_to = 3.0;
  std::size_t steps = 81;
  std::string output;
};
int cmd_scan_symmetric(const ScanOptions& opts, std::ostream& out,
                       std::ostream& err);

/// Rows of the pure symmetric family scan; b ascending.
std::vector<ScanRow> scan_symmetric(std::size_t modes,
                                    const std::vector<std::size_t>& sizes,
                                    double b_from, double b_to,
                                    std::size_t steps);

/// "3,1,1,1" -> {3, 1, 1, 1}. Throws InvalidArgument.
std::vector<std::size_t> parse_sizes(const std::string& spec);

int cmd_paper_verify(std::ostream& out, std::ostream& err);

}  // namespace gqn::cli
