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

// Command-line front end: check, witness, generate, symmetric,
// scan-symmetric, paper-verify.

#include <iostream>

#include "CLI11.hpp"

#include "gqn/commands.hpp"

namespace {

void add_topology(CLI::App* cmd, std::string& topology) {
  cmd->add_option("--topology", topology, "Network topology")
      ->required()
      ->check(CLI::IsMember({"triangle", "star", "chain"}));
}

}  // namespace

int main(int argc, char** argv) {
  using namespace gqn::cli;

  CLI::App app{"Gaussian quantum network covariance-matrix toolkit"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Validate a state document");
  check_cmd->add_option("file", check.path, "State document (JSON)")->required();
  check_cmd->add_option("--tol", check.tol, "Physicality tolerance");

  WitnessOptions witness;
  auto* witness_cmd =
      app.add_subcommand("witness", "Evaluate network exclusion criteria");
  witness_cmd->add_option("file", witness.path, "State document (JSON)")
      ->required();
  add_topology(witness_cmd, witness.topology);
  witness_cmd->add_option("-n,--parties", witness.sources,
                          "Source count (default: parties - 1)");
  witness_cmd->add_option("--tol", witness.tol,
                          "Tolerance on |mutual information|");
  witness_cmd->add_option("--residual-tol", witness.residual_tol,
                          "Slack for positive M residuals");
  witness_cmd->add_flag("--json", witness.json, "Machine-readable report");

  GenerateOptions generate;
  double squeeze = 0.0;
  auto* generate_cmd =
      app.add_subcommand("generate", "Assemble a network state document");
  add_topology(generate_cmd, generate.topology);
  generate_cmd->add_option("-n,--parties", generate.sources,
                           "Source count for star/chain");
  auto* squeeze_opt =
      generate_cmd->add_option("--squeeze", squeeze, "Squeezing r of every source");
  generate_cmd->add_option("--squeeze-list", generate.squeeze_list,
                           "Per-source squeezing, comma separated")
      ->delimiter(',');
  generate_cmd->add_option("--noise", generate.noise,
                           "Symmetric thermal noise factor (>= 1)");
  generate_cmd->add_option("--rmax", generate.rmax,
                           "Max local squeezing of random local unitaries");
  generate_cmd->add_option("--seed", generate.seed, "Random seed");
  generate_cmd->add_flag("--identity-locals", generate.identity_locals,
                         "Skip the random local unitaries");
  generate_cmd->add_option("-o,--output", generate.output, "Output file");

  SymmetricOptions symmetric;
  auto* symmetric_cmd =
      app.add_subcommand("symmetric", "Emit a fully symmetric state document");
  symmetric_cmd->add_option("--modes", symmetric.modes, "Mode count")->required();
  symmetric_cmd->add_option("--b", symmetric.b, "Diagonal variance b")->required();
  symmetric_cmd->add_flag("--pure", symmetric.pure, "Solve e1, e2 for purity");
  symmetric_cmd->add_option("--e1", symmetric.e1, "x-quadrature correlation");
  symmetric_cmd->add_option("--e2", symmetric.e2, "p-quadrature correlation");
  symmetric_cmd->add_option("--partition", symmetric.partition,
                            "Party sizes, e.g. 3,1,1,1");
  symmetric_cmd->add_option("-o,--output", symmetric.output, "Output file");

  ScanOptions scan;
  auto* scan_cmd = app.add_subcommand(
      "scan-symmetric", "Scan the pure symmetric family over b (CSV)");
  scan_cmd->add_option("--modes", scan.modes, "Mode count")->required();
  scan_cmd->add_option("--partition", scan.partition, "Party sizes, e.g. 3,1,1,1");
  scan_cmd->add_option("--b-from", scan.b_from, "First b");
  scan_cmd->add_option("--b-to", scan.b_to, "Last b");
  scan_cmd->add_option("--steps", scan.steps, "Number of rows");
  scan_cmd->add_option("--out,-o", scan.output, "CSV output file");

  auto* verify_cmd = app.add_subcommand(
      "paper-verify", "Reproduce the analytic case studies");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInput;
  }

  if (*check_cmd) return cmd_check(check, std::cout, std::cerr);
  if (*witness_cmd) return cmd_witness(witness, std::cout, std::cerr);
  if (*generate_cmd) {
    if (*squeeze_opt) generate.squeeze = squeeze;
    return cmd_generate(generate, std::cout, std::cerr);
  }
  if (*symmetric_cmd) return cmd_symmetric(symmetric, std::cout, std::cerr);
  if (*scan_cmd) return cmd_scan_symmetric(scan, std::cout, std::cerr);
  if (*verify_cmd) return cmd_paper_verify(std::cout, std::cerr);
  return kExitInvalidInput;
}
