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

#include "gqn/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <tuple>

#include "gqn/case_studies.hpp"

namespace gqn::cli {

using nlohmann::json;

namespace {

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::UnphysicalParameter:
    case ErrorKind::Domain:
      return kExitUnphysical;
    default:
      return kExitInvalidInput;
  }
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += format_double(values[i]);
  }
  return out;
}

bool all_close(const std::vector<double>& values, double target, double tol) {
  for (double v : values) {
    if (std::abs(v - target) > tol) return false;
  }
  return true;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  file << text;
  if (!file) throw Error(ErrorKind::InvalidArgument, "write failed: " + path);
}

}  // namespace

double default_tolerance(double fallback) {
  const char* env = std::getenv("GQN_DEFAULT_TOL");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const double value = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(value > 0.0) || !std::isfinite(value)) {
    return fallback;
  }
  return value;
}

std::vector<std::size_t> parse_sizes(const std::string& spec) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size() || value <= 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "bad partition entry '" + item + "' in '" + spec + "'");
    }
    sizes.push_back(static_cast<std::size_t>(value));
  }
  if (sizes.empty()) {
    throw Error(ErrorKind::InvalidArgument, "empty partition specification");
  }
  return sizes;
}

namespace {

std::vector<std::size_t> sizes_or_singletons(const std::string& spec,
                                             std::size_t modes) {
  std::vector<std::size_t> sizes =
      spec.empty() ? std::vector<std::size_t>(modes, 1) : parse_sizes(spec);
  std::size_t total = 0;
  for (std::size_t s : sizes) total += s;
  if (total != modes) {
    throw Error(ErrorKind::InvalidArgument,
                "partition '" + spec + "' covers " + std::to_string(total) +
                    " modes, expected " + std::to_string(modes));
  }
  return sizes;
}

}  // namespace

// ---------------------------------------------------------------------------
// check

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  const double tol = opts.tol.value_or(default_tolerance(kDefaultPhysicalityTol));
  std::optional<ReadResult> result;
  try {
    result.emplace(read_state(opts.path, tol, /*strict=*/false));
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  const Validation& v = result->validation;
  out << "file: " << opts.path << "\n";
  out << "modes: " << v.modes << "\n";
  out << "symmetric: " << (v.symmetric ? "yes" : "no")
      << " (max relative asymmetry " << format_double(v.max_asymmetry) << ")\n";
  out << "positive definite: " << (v.positive_definite ? "yes" : "no") << "\n";
  if (v.positive_definite) {
    out << "symplectic spectrum: " << join(v.spectrum.values) << "\n";
    out << "min symplectic eigenvalue: "
        << format_double(v.min_symplectic_eigenvalue) << "\n";
    out << "det: " << format_double(v.det) << "\n";
    out << "ln det: " << format_double(v.log_det) << "\n";
  }
  out << "tolerance: " << format_short(tol) << "\n";
  if (!v.physical) {
    out << "state: unphysical";
    if (!v.symmetric) out << " (matrix is not symmetric)";
    else if (!v.positive_definite) out << " (matrix is not positive definite)";
    else out << " (min ν = " << format_double(v.min_symplectic_eigenvalue) << " < 1)";
    out << "\n";
    return kExitUnphysical;
  }
  if (v.pure) {
    out << "state: pure, spectrum all 1\n";
  } else if (all_close(v.spectrum.values, v.spectrum.values.front(), tol)) {
    out << "state: mixed, ν=" << format_short(v.spectrum.values.front()) << "\n";
  } else {
    out << "state: mixed, ν=[" << join(v.spectrum.values) << "]\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// witness

json report_to_json(const WitnessReport& report) {
  json criteria = json::array();
  for (const Criterion& c : report.criteria) {
    criteria.push_back({{"name", c.name},
                        {"value", c.value},
                        {"threshold", c.threshold},
                        {"violated", c.violated}});
  }
  json diagnostics = json::array();
  for (const MonogamyResidual& d : report.diagnostics) {
    diagnostics.push_back({{"bipartition", d.bipartition}, {"value", d.value}});
  }
  return json{
      {"topology",
       {{"kind", report.topology.kind_name()},
        {"sources", report.topology.sources()},
        {"name", report.topology.name()}}},
      {"criteria", std::move(criteria)},
      {"diagnostics", std::move(diagnostics)},
      {"tolerances",
       {{"mutual_information", report.mutual_info_tol},
        {"residual", report.residual_tol}}},
      {"verdict", std::string(verdict_name(report.verdict))}};
}

int cmd_witness(const WitnessOptions& opts, std::ostream& out,
                std::ostream& err) {
  WitnessReport report{NetworkTopology::triangle(), {}, {}, 0.0, 0.0,
                       Verdict::Consistent};
  try {
    const ReadResult result = read_state(opts.path);
    if (result.unphysical_warning) {
      err << "warning: state is not physical (min symplectic eigenvalue "
          << format_double(result.validation.min_symplectic_eigenvalue)
          << ")\n";
    }
    const PartitionedState& state = result.document.state;
    std::size_t n = 0;
    if (opts.sources) {
      n = *opts.sources;
    } else if (opts.topology != "triangle") {
      n = state.partition().size() - 1;
    }
    const NetworkTopology topology = NetworkTopology::parse(opts.topology, n);
    const double tol = opts.tol.value_or(default_tolerance(kDefaultMutualInfoTol));
    report = witness_report(state, topology, tol, opts.residual_tol);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  if (opts.json) {
    out << report_to_json(report).dump(2) << "\n";
  } else {
    out << "topology: " << report.topology.name() << "\n";
    for (const Criterion& c : report.criteria) {
      out << c.name << ": " << format_double(c.value) << " (threshold "
          << format_short(c.threshold) << ") "
          << (c.violated ? "VIOLATED" : "ok") << "\n";
    }
    for (const MonogamyResidual& d : report.diagnostics) {
      out << "diagnostic neighbour residual " << d.bipartition << ": "
          << format_double(d.value) << "\n";
    }
    out << "verdict: " << verdict_name(report.verdict);
    if (report.verdict == Verdict::Consistent) {
      out << " (necessary conditions hold; this does not prove preparability)";
    } else {
      out << " (cannot be prepared by a " << report.topology.kind_name()
          << " network)";
    }
    out << "\n";
  }
  return report.verdict == Verdict::Excluded ? kExitExcluded : kExitOk;
}

// ---------------------------------------------------------------------------
// generate

StateDocument generate_document(const GenerateOptions& opts) {
  if (opts.squeeze && !opts.squeeze_list.empty()) {
    throw Error(ErrorKind::InvalidArgument,
                "use either --squeeze or --squeeze-list, not both");
  }
  if (!opts.squeeze && opts.squeeze_list.empty()) {
    throw Error(ErrorKind::InvalidArgument,
                "one of --squeeze or --squeeze-list is required");
  }
  std::size_t n = 0;
  if (opts.topology == "triangle") {
    n = 3;
    if (opts.sources && *opts.sources != 3) {
      throw Error(ErrorKind::InvalidArgument, "a triangle has exactly 3 sources");
    }
  } else if (opts.sources) {
    n = *opts.sources;
  } else if (!opts.squeeze_list.empty()) {
    n = opts.squeeze_list.size();
  } else {
    throw Error(ErrorKind::InvalidArgument,
                "--parties/-n is required for star and chain networks");
  }
  const NetworkTopology topology = NetworkTopology::parse(opts.topology, n);

  std::vector<double> squeezes = opts.squeeze_list;
  if (squeezes.empty()) squeezes.assign(topology.sources(), *opts.squeeze);
  if (squeezes.size() != topology.sources()) {
    throw Error(ErrorKind::InvalidArgument,
                topology.name() + " needs " + std::to_string(topology.sources()) +
                    " squeezing values, got " + std::to_string(squeezes.size()));
  }
  std::vector<TwoModeSource> sources;
  for (double r : squeezes) sources.push_back({r, opts.noise});
  if (!(opts.rmax >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "--rmax must be >= 0");
  }

  std::vector<LocalBlock> locals;
  if (!opts.identity_locals) locals = random_locals(topology, opts.rmax, opts.seed);
  PartitionedState state = [&] {
    try {
      return assemble(topology, sources, locals);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::UnphysicalParameter) {
        throw Error(ErrorKind::InvalidArgument, e.what());
      }
      throw;
    }
  }();

  json layout = json::array();
  for (const auto& party : topology.layout()) {
    json slots = json::array();
    for (const ModeSlot& s : party) slots.push_back({s.source, s.end});
    layout.push_back(std::move(slots));
  }
  json metadata{{"generator", "gqn generate"},
                {"topology", topology.kind_name()},
                {"sources", topology.sources()},
                {"squeeze", squeezes},
                {"noise", opts.noise},
                {"locals", opts.identity_locals ? "identity" : "random"},
                {"rmax", opts.rmax},
                {"seed", opts.seed},
                {"source_modes_per_party", std::move(layout)}};
  return StateDocument{std::move(state), std::move(metadata)};
}

int cmd_generate(const GenerateOptions& opts, std::ostream& out,
                 std::ostream& err) {
  try {
    const StateDocument doc = generate_document(opts);
    for (double r : doc.metadata.at("squeeze")) {
      if (!source_is_entangled({r, opts.noise})) {
        err << "warning: source with r=" << format_double(r)
            << " and noise=" << format_double(opts.noise)
            << " is separable (noise >= e^{2r})\n";
      }
    }
    emit(dump_state(doc), opts.output, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// symmetric

int cmd_symmetric(const SymmetricOptions& opts, std::ostream& out,
                  std::ostream& err) {
  try {
    if (opts.modes == 0) {
      throw Error(ErrorKind::InvalidArgument, "--modes must be at least 1");
    }
    const bool explicit_e = opts.e1.has_value() || opts.e2.has_value();
    if (opts.pure == explicit_e || (explicit_e && !(opts.e1 && opts.e2))) {
      throw Error(ErrorKind::InvalidArgument,
                  "give either --pure or both --e1 and --e2");
    }
    const auto sizes = sizes_or_singletons(opts.partition, opts.modes);
    SymmetricFamilyParams params{opts.modes, opts.b, 0.0, 0.0};
    if (opts.pure) {
      std::tie(params.e1, params.e2) = pure_symmetric_params(opts.modes, opts.b);
    } else {
      params.e1 = *opts.e1;
      params.e2 = *opts.e2;
    }
    CovarianceMatrix cm = symmetric_cm(params);
    const auto spectrum = symmetric_spectrum_closed_form(params);
    json metadata{{"generator", "gqn symmetric"},
                  {"family", "fully_symmetric"},
                  {"modes", opts.modes},
                  {"b", params.b},
                  {"e1", params.e1},
                  {"e2", params.e2},
                  {"pure", opts.pure},
                  {"partition_sizes", sizes},
                  {"v_plus", spectrum.max()},
                  {"v_minus", opts.modes > 1 ? spectrum.min() : spectrum.max()}};
    StateDocument doc{
        PartitionedState(std::move(cm), ModePartition::from_sizes(sizes)),
        std::move(metadata)};
    emit(dump_state(doc), opts.output, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// scan-symmetric

std::vector<ScanRow> scan_symmetric(std::size_t modes,
                                    const std::vector<std::size_t>& sizes,
                                    double b_from, double b_to,
                                    std::size_t steps) {
  if (steps == 0 || !(b_from <= b_to) || !std::isfinite(b_from) ||
      !std::isfinite(b_to)) {
    throw Error(ErrorKind::InvalidArgument, "empty scan range");
  }
  if (b_from < 1.0) {
    throw Error(ErrorKind::InvalidArgument, "scan range must start at b >= 1");
  }
  if (sizes.size() < 2) {
    throw Error(ErrorKind::InvalidArgument, "scan needs at least two parties");
  }
  const ModePartition partition = ModePartition::from_sizes(sizes);
  if (partition.modes() != modes) {
    throw Error(ErrorKind::InvalidArgument, "partition does not cover the modes");
  }
  const std::size_t count = (b_from == b_to) ? 1 : steps;
  std::vector<ScanRow> rows;
  rows.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double b = b_from;
    if (count > 1) {
      b = (i + 1 == count)
              ? b_to
              : b_from + (b_to - b_from) * static_cast<double>(i) /
                             static_cast<double>(count - 1);
    }
    const auto [e1, e2] = pure_symmetric_params(modes, b);
    const SymmetricFamilyParams params{modes, b, e1, e2};
    const PartitionedState state(symmetric_cm(params), partition);
    const auto spectrum = symmetric_spectrum_closed_form(params);
    ScanRow row;
    row.b = b;
    row.mutual_information = mutual_information(state);
    for (std::size_t p = 0; p < partition.size(); ++p) {
      row.residuals.push_back(one_vs_rest_residual(state, p));
    }
    row.v_plus = spectrum.max();
    row.v_minus = spectrum.min();
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_scan_symmetric(const ScanOptions& opts, std::ostream& out,
                       std::ostream& err) {
  try {
    if (opts.modes < 2) {
      throw Error(ErrorKind::InvalidArgument, "--modes must be at least 2");
    }
    const auto sizes = sizes_or_singletons(opts.partition, opts.modes);
    const auto rows =
        scan_symmetric(opts.modes, sizes, opts.b_from, opts.b_to, opts.steps);
    std::ostringstream csv;
    write_scan_csv(csv, rows);
    emit(csv.str(), opts.output, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// paper-verify

int cmd_paper_verify(std::ostream& out, std::ostream& err) {
  try {
    const CaseStudyReport report = run_case_studies();
    print_case_studies(report, out);
    return report.all_passed() ? kExitOk : kExitFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
}

}  // namespace gqn::cli
