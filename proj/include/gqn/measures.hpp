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

// Entropies and correlation quantities of partitioned Gaussian states.
// All entropies are in nats.

#include <cstdint>
#include <span>
#include <string>

#include "gqn/core.hpp"

namespace gqn {

inline constexpr double kPureDetTol = 1e-6;
inline constexpr std::size_t kMaxParties = 16;

/// A covariance matrix together with the parties that own its modes.
class PartitionedState {
 public:
  PartitionedState(CovarianceMatrix cm, ModePartition partition);

  const CovarianceMatrix& cm() const noexcept { return cm_; }
  const ModePartition& partition() const noexcept { return partition_; }

 private:
  CovarianceMatrix cm_;
  ModePartition partition_;
};

/// S_2 = 1/2 ln det V. Throws Numeric if V is unphysical at `tol`.
double renyi2_entropy(const CovarianceMatrix& v,
                      double tol = kDefaultPhysicalityTol);

/// Entropy contribution of one symplectic eigenvalue; 0 for nu within tol
/// of 1.
double von_neumann_term(double nu, double tol = kDefaultPhysicalityTol);

double von_neumann_entropy(const CovarianceMatrix& v,
                           double tol = kDefaultPhysicalityTol);

/// Alternating sum over all non-empty party subsets T of
/// (-1)^{|T|-1} S_2(V_T). Needs at least two parties.
double mutual_information(const PartitionedState& state);

/// 1 - det V_AB / (det V_A det V_B) for the two parties of `state`.
double m_measure(const PartitionedState& state);

/// M between two disjoint, non-empty groups of parties, evaluated on the
/// reduced state of their union.
double m_measure_between(const PartitionedState& state,
                         std::span<const std::string> group_a,
                         std::span<const std::string> group_b);
double m_measure_between(const PartitionedState& state, std::uint32_t mask_a,
                         std::uint32_t mask_b);

/// Entropy of entanglement of a pure two-party state.
double squashed_entanglement_pure(const PartitionedState& state,
                                  double purity_tol = kPureDetTol);

/// Entropy of entanglement across group | complement of a pure state.
double entanglement_entropy_pure(const PartitionedState& state,
                                 std::uint32_t group_mask,
                                 double purity_tol = kPureDetTol);

}  // namespace gqn
