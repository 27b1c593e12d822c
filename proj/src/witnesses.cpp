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

#include "gqn/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gqn {

namespace {

void check_arity(const PartitionedState& state,
                 const NetworkTopology& topology) {
  if (state.partition().size() != topology.party_count()) {
    std::ostringstream os;
    os << topology.name() << " has " << topology.party_count()
       << " parties but the state is split into "
       << state.partition().size();
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
}

std::string joined_labels(const ModePartition& p, std::uint32_t mask) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (mask & (1u << i)) out += p.party(i).label;
  }
  return out;
}

std::string cut_name(const ModePartition& p, std::size_t party) {
  const std::uint32_t all = (1u << p.size()) - 1u;
  return p.party(party).label + "|" + joined_labels(p, all & ~(1u << party));
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  return v == Verdict::Consistent ? "consistent" : "excluded";
}

MutualInfoWitness theorem1_witness(const PartitionedState& state,
                                   const NetworkTopology& topology,
                                   double tol) {
  check_arity(state, topology);
  MutualInfoWitness out;
  out.value = mutual_information(state);
  out.verdict =
      std::abs(out.value) > tol ? Verdict::Excluded : Verdict::Consistent;
  return out;
}

double one_vs_rest_residual(const PartitionedState& state,
                            std::size_t party) {
  const std::size_t n = state.partition().size();
  if (party >= n || n < 2) {
    throw Error(ErrorKind::InvalidArgument, "invalid party for residual");
  }
  const std::uint32_t x = 1u << party;
  const std::uint32_t rest = ((1u << n) - 1u) & ~x;
  double residual = m_measure_between(state, x, rest);
  for (std::size_t other = 0; other < n; ++other) {
    if (other == party) continue;
    residual -= m_measure_between(state, x, 1u << other);
  }
  return residual;
}

MonogamyWitness theorem5_witness(const PartitionedState& state,
                                 const NetworkTopology& topology,
                                 double tol) {
  check_arity(state, topology);
  const ModePartition& p = state.partition();
  MonogamyWitness out;
  if (topology.kind() == TopologyKind::Triangle) {
    for (std::size_t x = 0; x < 3; ++x) {
      out.residuals.push_back({cut_name(p, x), one_vs_rest_residual(state, x)});
    }
  } else {
    out.residuals.push_back({cut_name(p, 0), one_vs_rest_residual(state, 0)});
  }
  const bool violated =
      std::any_of(out.residuals.begin(), out.residuals.end(),
                  [&](const MonogamyResidual& r) { return r.value > tol; });
  out.verdict = violated ? Verdict::Excluded : Verdict::Consistent;
  return out;
}

std::vector<MonogamyResidual> chain_neighbor_residuals(
    const PartitionedState& state) {
  const ModePartition& p = state.partition();
  const std::size_t n = p.size();
  std::vector<MonogamyResidual> out;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const std::uint32_t x = 1u << i;
    const std::uint32_t rest = ((1u << n) - 1u) & ~x;
    const double value = m_measure_between(state, x, rest) -
                         m_measure_between(state, 1u << (i - 1), x) -
                         m_measure_between(state, x, 1u << (i + 1));
    out.push_back({cut_name(p, i), value});
  }
  return out;
}

WitnessReport witness_report(const PartitionedState& state,
                             const NetworkTopology& topology,
                             double mutual_info_tol, double residual_tol) {
  const auto mi = theorem1_witness(state, topology, mutual_info_tol);
  const auto mono = theorem5_witness(state, topology, residual_tol);
  WitnessReport report{topology, {}, {}, mutual_info_tol, residual_tol,
                       Verdict::Consistent};
  report.criteria.push_back({"mutual_information", mi.value, mutual_info_tol,
                             mi.verdict == Verdict::Excluded});
  for (const auto& r : mono.residuals) {
    report.criteria.push_back({"m_residual " + r.bipartition, r.value,
                               residual_tol, r.value > residual_tol});
  }
  if (topology.kind() == TopologyKind::Chain) {
    report.diagnostics = chain_neighbor_residuals(state);
  }
  const bool any = std::any_of(report.criteria.begin(), report.criteria.end(),
                               [](const Criterion& c) { return c.violated; });
  report.verdict = any ? Verdict::Excluded : Verdict::Consistent;
  return report;
}

double source_entanglement(double squeeze) {
  return von_neumann_term(std::cosh(2.0 * squeeze));
}

std::vector<PureSourceCheck> theorem234_pure_check(
    const PartitionedState& state, const NetworkTopology& topology,
    std::span<const TwoModeSource> sources, double tol) {
  check_arity(state, topology);
  if (sources.size() != topology.sources()) {
    throw Error(ErrorKind::InvalidArgument, "source count does not match");
  }
  for (const auto& src : sources) {
    if (src.noise != 1.0) {
      throw Error(ErrorKind::UnsupportedCase,
                  "pure-source check needs noiseless sources");
    }
  }
  std::vector<std::size_t> cuts;
  switch (topology.kind()) {
    case TopologyKind::Triangle: cuts = {0, 1, 2}; break;
    case TopologyKind::Star: cuts = {0}; break;
    case TopologyKind::Chain:
      for (std::size_t i = 1; i < topology.sources(); ++i) cuts.push_back(i);
      break;
  }
  const auto layout = topology.layout();
  std::vector<PureSourceCheck> out;
  for (std::size_t party : cuts) {
    PureSourceCheck check;
    check.bipartition = cut_name(state.partition(), party);
    check.lhs = entanglement_entropy_pure(state, 1u << party);
    // A source crosses the cut iff exactly one of its ends is held here.
    std::vector<int> ends_here(sources.size(), 0);
    for (const ModeSlot& slot : layout[party]) ++ends_here[slot.source];
    for (std::size_t s = 0; s < sources.size(); ++s) {
      if (ends_here[s] == 1) check.rhs += source_entanglement(sources[s].squeeze);
    }
    check.equal = std::abs(check.lhs - check.rhs) <= tol;
    out.push_back(std::move(check));
  }
  return out;
}

double lemma41_expression(std::span<const double> a) {
  if (a.size() < 2) {
    throw Error(ErrorKind::Domain, "expression needs at least two values");
  }
  double sum = 0.0;
  double product = 1.0;
  for (double x : a) {
    if (!(x >= 0.0 && x <= 1.0)) {
      std::ostringstream os;
      os << "value " << x << " outside [0, 1]";
      throw Error(ErrorKind::Domain, os.str());
    }
    sum += x;
    product *= x;
  }
  return 1.0 - static_cast<double>(a.size()) + sum - product;
}

}  // namespace gqn
