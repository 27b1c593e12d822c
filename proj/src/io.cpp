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

#include "gqn/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace gqn {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& pointer,
                              const std::string& message) {
  throw Error(ErrorKind::Parse, (pointer.empty() ? "/" : pointer) + ": " + message);
}

const json& require(const json& j, const char* key, const std::string& at) {
  if (!j.is_object()) parse_error(at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_error(at + "/" + key, "missing required field");
  return *it;
}

std::size_t as_index(const json& j, const std::string& at) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    parse_error(at, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

json to_json(const StateDocument& doc) {
  const CovarianceMatrix& v = doc.state.cm();
  json matrix = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < v.dim(); ++j) row.push_back(v(i, j));
    matrix.push_back(std::move(row));
  }
  json partition = json::array();
  for (const Party& party : doc.state.partition().parties()) {
    partition.push_back({{"label", party.label}, {"mode_indices", party.modes}});
  }
  return json{{"format_version", kFormatVersion},
              {"modes", v.modes()},
              {"matrix", std::move(matrix)},
              {"partition", std::move(partition)},
              {"metadata", doc.metadata.is_null() ? json::object() : doc.metadata}};
}

StateDocument state_from_json(const json& j) {
  const json& version = require(j, "format_version", "");
  if (!version.is_number_integer()) {
    parse_error("/format_version", "expected an integer");
  }
  if (version.get<long long>() != kFormatVersion) {
    parse_error("/format_version",
                "unsupported version " + version.dump());
  }
  const std::size_t modes = as_index(require(j, "modes", ""), "/modes");
  if (modes == 0) parse_error("/modes", "must be at least 1");
  if (modes > kMaxModes) {
    parse_error("/modes", "at most " + std::to_string(kMaxModes) +
                              " modes are supported");
  }
  const std::size_t dim = 2 * modes;

  const json& rows = require(j, "matrix", "");
  if (!rows.is_array()) parse_error("/matrix", "expected an array of rows");
  if (rows.size() != dim) {
    parse_error("/matrix", "expected " + std::to_string(dim) + " rows, got " +
                               std::to_string(rows.size()));
  }
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::string at = "/matrix/" + std::to_string(i);
    const json& row = rows[i];
    if (!row.is_array() || row.size() != dim) {
      parse_error(at, "expected an array of " + std::to_string(dim) +
                          " numbers");
    }
    for (std::size_t k = 0; k < dim; ++k) {
      if (!row[k].is_number()) {
        parse_error(at + "/" + std::to_string(k), "expected a number");
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          row[k].get<double>();
    }
  }

  const json& parts = require(j, "partition", "");
  if (!parts.is_array()) parse_error("/partition", "expected an array");
  std::vector<Party> parties;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const std::string at = "/partition/" + std::to_string(p);
    const json& label = require(parts[p], "label", at);
    if (!label.is_string()) parse_error(at + "/label", "expected a string");
    const json& idx = require(parts[p], "mode_indices", at);
    if (!idx.is_array()) parse_error(at + "/mode_indices", "expected an array");
    Party party{label.get<std::string>(), {}};
    for (std::size_t k = 0; k < idx.size(); ++k) {
      party.modes.push_back(
          as_index(idx[k], at + "/mode_indices/" + std::to_string(k)));
    }
    parties.push_back(std::move(party));
  }

  json metadata = json::object();
  if (auto it = j.find("metadata"); it != j.end()) {
    if (!it->is_object()) parse_error("/metadata", "expected an object");
    metadata = *it;
  }

  try {
    ModePartition partition(std::move(parties), modes);
    return StateDocument{PartitionedState(CovarianceMatrix(std::move(m)),
                                          std::move(partition)),
                         std::move(metadata)};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    parse_error("/partition", e.what());
  }
}

std::string dump_state(const StateDocument& doc) {
  return to_json(doc).dump(2) + "\n";
}

ReadResult parse_state(std::string_view text, double tol, bool strict) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("/: invalid JSON: ") + e.what());
  }
  StateDocument doc = state_from_json(j);
  Validation validation = validate(doc.state.cm(), tol);
  const bool bad = !validation.physical;
  if (bad && strict) {
    std::ostringstream os;
    os << "matrix is not a physical covariance matrix (min symplectic "
          "eigenvalue "
       << validation.min_symplectic_eigenvalue << ")";
    throw Error(ErrorKind::Numeric, os.str());
  }
  return ReadResult{std::move(doc), std::move(validation), bad};
}

void write_state(const StateDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << dump_state(doc);
  if (!out) throw Error(ErrorKind::InvalidArgument, "write failed: " + path.string());
}

ReadResult read_state(const std::filesystem::path& path, double tol,
                      bool strict) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state(buffer.str(), tol, strict);
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_short(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  const std::size_t k = rows.empty() ? 0 : rows.front().residuals.size();
  out << "b,I";
  for (std::size_t i = 1; i <= k; ++i) out << ",residual_" << i;
  out << ",v_minus,v_plus\n";
  for (const ScanRow& row : rows) {
    out << format_double(row.b) << ',' << format_double(row.mutual_information);
    for (double r : row.residuals) out << ',' << format_double(r);
    out << ',' << format_double(row.v_minus) << ',' << format_double(row.v_plus)
        << '\n';
  }
}

}  // namespace gqn
