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

// Necessary conditions for a state to come out of a triangle, star or chain
// Gaussian network. A violated criterion excludes the network; passing all
// of them proves nothing about preparability.

#include <span>
#include <string>
#include <vector>

#include "gqn/measures.hpp"
#include "gqn/networks.hpp"

namespace gqn {

inline constexpr double kDefaultMutualInfoTol = 1e-6;
inline constexpr double kDefaultResidualTol = 1e-9;

enum class Verdict { Consistent, Excluded };

std::string_view verdict_name(Verdict v);

struct Criterion {
  std::string name;
  double value = 0.0;
  // Criterion is violated when |value| > threshold (zero tests) or
  // value > threshold (sign tests).
  double threshold = 0.0;
  bool violated = false;
};

struct MutualInfoWitness {
  double value = 0.0;
  Verdict verdict = Verdict::Consistent;
};

struct MonogamyResidual {
  // e.g. "A1|A2A3A4" or "B|AC".
  std::string bipartition;
  double value = 0.0;
};

struct MonogamyWitness {
  std::vector<MonogamyResidual> residuals;
  Verdict verdict = Verdict::Consistent;
};

struct WitnessReport {
  NetworkTopology topology;
  std::vector<Criterion> criteria;
  // Informational; never part of the verdict.
  std::vector<MonogamyResidual> diagnostics;
  double mutual_info_tol = kDefaultMutualInfoTol;
  double residual_tol = kDefaultResidualTol;
  Verdict verdict = Verdict::Consistent;
};

/// Vanishing multipartite mutual information. Excluded iff |I| > tol.
MutualInfoWitness theorem1_witness(const PartitionedState& state,
                                   const NetworkTopology& topology,
                                   double tol = kDefaultMutualInfoTol);

/// M monogamy residuals: every X|YZ for triangles, the hub A1 against all
/// other parties for stars and chains. Excluded iff some residual > tol.
MonogamyWitness theorem5_witness(const PartitionedState& state,
                                 const NetworkTopology& topology,
                                 double tol = kDefaultResidualTol);

/// M_{X|rest} - sum_{Y != X} M_{X|Y} for party X.
double one_vs_rest_residual(const PartitionedState& state, std::size_t party);

/// Chain diagnostic: M_{Ai|rest} - M_{A(i-1)|Ai} - M_{Ai|A(i+1)} for every
/// inner party.
std::vector<MonogamyResidual> chain_neighbor_residuals(
    const PartitionedState& state);

WitnessReport witness_report(const PartitionedState& state,
                             const NetworkTopology& topology,
                             double mutual_info_tol = kDefaultMutualInfoTol,
                             double residual_tol = kDefaultResidualTol);

struct PureSourceCheck {
  std::string bipartition;
  double lhs = 0.0;
  double rhs = 0.0;
  bool equal = false;
};

/// Entanglement entropy of a pure two-mode squeezed vacuum, g(cosh 2r).
double source_entanglement(double squeeze);

/// For pure-source networks the squashed entanglement across each cut
/// named by the monogamy equalities (X|YZ for triangles, A1|rest for stars,
/// Ai|rest for inner chain parties) must equal the sum of the entanglement
/// of the sources crossing it.
std::vector<PureSourceCheck> theorem234_pure_check(
    const PartitionedState& state, const NetworkTopology& topology,
    std::span<const TwoModeSource> sources, double tol = 1e-8);

/// 1 - n + sum a_i - prod a_i for a_i in [0, 1], n >= 2.
double lemma41_expression(std::span<const double> a);

}  // namespace gqn
