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

#include "gqn/measures.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace gqn {

namespace {

double log_det_of_mask(const PartitionedState& state, std::uint32_t mask) {
  const auto modes = state.partition().modes_of_mask(mask);
  return log_det(reduce_modes(state.cm(), modes));
}

void check_physical(const CovarianceMatrix& v, double tol) {
  const auto spectrum = symplectic_spectrum(v);
  if (spectrum.min() < 1.0 - tol) {
    std::ostringstream os;
    os << "state is unphysical: smallest symplectic eigenvalue "
       << spectrum.min();
    throw Error(ErrorKind::Numeric, os.str());
  }
}

std::uint32_t full_mask(std::size_t parties) {
  return parties >= 32 ? ~0u : (1u << parties) - 1u;
}

}  // namespace

PartitionedState::PartitionedState(CovarianceMatrix cm,
                                   ModePartition partition)
    : cm_(std::move(cm)), partition_(std::move(partition)) {
  if (partition_.modes() != cm_.modes()) {
    throw Error(ErrorKind::Shape,
                "partition covers " + std::to_string(partition_.modes()) +
                    " modes but the state has " + std::to_string(cm_.modes()));
  }
}

double renyi2_entropy(const CovarianceMatrix& v, double tol) {
  check_physical(v, tol);
  return 0.5 * log_det(v);
}

double von_neumann_term(double nu, double tol) {
  if (nu < 1.0 - tol) {
    std::ostringstream os;
    os << "symplectic eigenvalue " << nu << " below 1";
    throw Error(ErrorKind::Numeric, os.str());
  }
  if (nu - 1.0 <= tol) return 0.0;
  const double plus = 0.5 * (nu + 1.0);
  const double minus = 0.5 * (nu - 1.0);
  return plus * std::log(plus) - minus * std::log(minus);
}

double von_neumann_entropy(const CovarianceMatrix& v, double tol) {
  double total = 0.0;
  for (double nu : symplectic_spectrum(v).values) {
    total += von_neumann_term(nu, tol);
  }
  return total;
}

double mutual_information(const PartitionedState& state) {
  const std::size_t n = state.partition().size();
  if (n < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "mutual information needs at least two parties");
  }
  if (n > kMaxParties) {
    throw Error(ErrorKind::Capacity, "too many parties");
  }
  // Neumaier-compensated sum in fixed mask order.
  double sum = 0.0;
  double carry = 0.0;
  for (std::uint32_t mask = 1; mask <= full_mask(n); ++mask) {
    const double sign = (std::popcount(mask) % 2 == 1) ? 1.0 : -1.0;
    const double term = sign * 0.5 * log_det_of_mask(state, mask);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      carry += (sum - t) + term;
    } else {
      carry += (term - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

double m_measure_between(const PartitionedState& state, std::uint32_t mask_a,
                         std::uint32_t mask_b) {
  const std::uint32_t all = full_mask(state.partition().size());
  if (mask_a == 0 || mask_b == 0 || (mask_a & mask_b) != 0 ||
      ((mask_a | mask_b) & ~all) != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "M needs two disjoint non-empty party groups");
  }
  const double delta = log_det_of_mask(state, mask_a | mask_b) -
                       log_det_of_mask(state, mask_a) -
                       log_det_of_mask(state, mask_b);
  return -std::expm1(delta);
}

double m_measure_between(const PartitionedState& state,
                         std::span<const std::string> group_a,
                         std::span<const std::string> group_b) {
  return m_measure_between(state, state.partition().mask_of(group_a),
                           state.partition().mask_of(group_b));
}

double m_measure(const PartitionedState& state) {
  if (state.partition().size() != 2) {
    throw Error(ErrorKind::InvalidArgument,
                "M is defined for exactly two parties, got " +
                    std::to_string(state.partition().size()));
  }
  return m_measure_between(state, 1u, 2u);
}

double entanglement_entropy_pure(const PartitionedState& state,
                                 std::uint32_t group_mask, double purity_tol) {
  const std::uint32_t all = full_mask(state.partition().size());
  if (group_mask == 0 || (group_mask & ~all) != 0) {
    throw Error(ErrorKind::InvalidArgument, "invalid party group");
  }
  const double det = std::exp(log_det(state.cm()));
  if (std::abs(det - 1.0) > purity_tol) {
    std::ostringstream os;
    os << "state is mixed (det V = " << det
       << "); squashed entanglement is only available for pure states";
    throw Error(ErrorKind::UnsupportedCase, os.str());
  }
  if (group_mask == all) return 0.0;
  const auto modes = state.partition().modes_of_mask(group_mask);
  return von_neumann_entropy(reduce_modes(state.cm(), modes));
}

double squashed_entanglement_pure(const PartitionedState& state,
                                  double purity_tol) {
  if (state.partition().size() != 2) {
    throw Error(ErrorKind::InvalidArgument,
                "squashed entanglement needs exactly two parties");
  }
  return entanglement_entropy_pure(state, 1u, purity_tol);
}

}  // namespace gqn
