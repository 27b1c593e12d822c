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

#include "gqn/networks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/QR>

namespace gqn {

// ---------------------------------------------------------------------------
// Topology

NetworkTopology NetworkTopology::triangle() {
  return NetworkTopology(TopologyKind::Triangle, 3);
}

NetworkTopology NetworkTopology::star(std::size_t n) {
  if (n < 1 || 2 * n > kMaxModes) {
    throw Error(ErrorKind::InvalidArgument,
                "star needs 1.." + std::to_string(kMaxModes / 2) +
                    " sources, got " + std::to_string(n));
  }
  return NetworkTopology(TopologyKind::Star, n);
}

NetworkTopology NetworkTopology::chain(std::size_t n) {
  if (n < 1 || 2 * n > kMaxModes) {
    throw Error(ErrorKind::InvalidArgument,
                "chain needs 1.." + std::to_string(kMaxModes / 2) +
                    " sources, got " + std::to_string(n));
  }
  return NetworkTopology(TopologyKind::Chain, n);
}

NetworkTopology NetworkTopology::parse(std::string_view kind, std::size_t n) {
  if (kind == "triangle") return triangle();
  if (kind == "star") return star(n);
  if (kind == "chain") return chain(n);
  throw Error(ErrorKind::InvalidArgument,
              "unknown topology '" + std::string(kind) + "'");
}

std::size_t NetworkTopology::party_count() const noexcept {
  return kind_ == TopologyKind::Triangle ? 3 : sources_ + 1;
}

std::string NetworkTopology::kind_name() const {
  switch (kind_) {
    case TopologyKind::Triangle: return "triangle";
    case TopologyKind::Star: return "star";
    case TopologyKind::Chain: return "chain";
  }
  return "unknown";
}

std::string NetworkTopology::name() const {
  if (kind_ == TopologyKind::Triangle) return "triangle";
  return kind_name() + "(" + std::to_string(sources_) + ")";
}

std::vector<std::vector<ModeSlot>> NetworkTopology::layout() const {
  std::vector<std::vector<ModeSlot>> parties(party_count());
  switch (kind_) {
    case TopologyKind::Triangle:
      parties[0] = {{0, 0}, {2, 1}};
      parties[1] = {{0, 1}, {1, 0}};
      parties[2] = {{1, 1}, {2, 0}};
      break;
    case TopologyKind::Star:
      for (std::size_t s = 0; s < sources_; ++s) {
        parties[0].push_back({s, 0});
        parties[s + 1].push_back({s, 1});
      }
      break;
    case TopologyKind::Chain:
      for (std::size_t s = 0; s < sources_; ++s) {
        parties[s].push_back({s, 0});
        parties[s + 1].push_back({s, 1});
      }
      // Inner party i received end 1 of source i-1 first, then end 0 of
      // source i; the loop above already appends in that order.
      break;
  }
  return parties;
}

std::vector<std::string> NetworkTopology::labels() const {
  if (kind_ == TopologyKind::Triangle) return {"A", "B", "C"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < party_count(); ++i) {
    out.push_back("A" + std::to_string(i + 1));
  }
  return out;
}

ModePartition NetworkTopology::partition() const {
  const auto slots = layout();
  const auto names = labels();
  std::vector<Party> parties;
  std::size_t next = 0;
  for (std::size_t p = 0; p < slots.size(); ++p) {
    Party party{names[p], {}};
    for (std::size_t k = 0; k < slots[p].size(); ++k) {
      party.modes.push_back(next++);
    }
    parties.push_back(std::move(party));
  }
  return ModePartition(std::move(parties), next);
}

// ---------------------------------------------------------------------------
// Sources and random symplectics

CovarianceMatrix two_mode_source(const TwoModeSource& src) {
  if (!(src.squeeze >= 0.0) || !std::isfinite(src.squeeze)) {
    throw Error(ErrorKind::UnphysicalParameter,
                "squeezing must be finite and >= 0");
  }
  if (!(src.noise >= 1.0) || !std::isfinite(src.noise)) {
    std::ostringstream os;
    os << "source noise " << src.noise << " < 1 is unphysical";
    throw Error(ErrorKind::UnphysicalParameter, os.str());
  }
  const double c = src.noise * std::cosh(2.0 * src.squeeze);
  const double s = src.noise * std::sinh(2.0 * src.squeeze);
  Matrix v = Matrix::Zero(4, 4);
  v(0, 0) = v(1, 1) = v(2, 2) = v(3, 3) = c;
  v(0, 2) = v(2, 0) = s;
  v(1, 3) = v(3, 1) = -s;
  return CovarianceMatrix(std::move(v));
}

bool source_is_entangled(const TwoModeSource& src) {
  return src.noise < std::exp(2.0 * src.squeeze);
}

Eigen::MatrixXcd haar_unitary(std::size_t m, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(m);
  Eigen::MatrixXcd z(n, n);
  const double scale = 1.0 / std::sqrt(2.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(i, j) = std::complex<double>(re * scale, im * scale);
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const std::complex<double> d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

SymplecticMatrix passive_symplectic(const Eigen::MatrixXcd& u) {
  const Eigen::Index m = u.rows();
  Matrix o(2 * m, 2 * m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const double x = u(i, j).real();
      const double y = u(i, j).imag();
      o(2 * i, 2 * j) = x;
      o(2 * i, 2 * j + 1) = -y;
      o(2 * i + 1, 2 * j) = y;
      o(2 * i + 1, 2 * j + 1) = x;
    }
  }
  return SymplecticMatrix(std::move(o));
}

SymplecticMatrix random_symplectic(std::size_t modes, double rmax,
                                   std::uint64_t seed) {
  if (modes == 0 || modes > kMaxModes) {
    throw Error(ErrorKind::InvalidArgument,
                "random_symplectic needs 1.." + std::to_string(kMaxModes) +
                    " modes");
  }
  if (!(rmax >= 0.0) || !std::isfinite(rmax)) {
    throw Error(ErrorKind::InvalidArgument, "rmax must be finite and >= 0");
  }
  std::mt19937_64 rng(seed);
  const SymplecticMatrix first = passive_symplectic(haar_unitary(modes, rng));
  std::uniform_real_distribution<double> squeeze(-rmax, rmax);
  const auto n = static_cast<Eigen::Index>(2 * modes);
  Matrix z = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; k += 2) {
    const double r = rmax > 0.0 ? squeeze(rng) : 0.0;
    z(k, k) = std::exp(r);
    z(k + 1, k + 1) = std::exp(-r);
  }
  const SymplecticMatrix second = passive_symplectic(haar_unitary(modes, rng));
  return SymplecticMatrix(first.matrix() * z * second.matrix());
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 over (seed, stream)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::vector<LocalBlock> random_locals(const NetworkTopology& topology,
                                      double rmax, std::uint64_t seed) {
  const auto partition = topology.partition();
  std::vector<LocalBlock> out;
  for (std::size_t p = 0; p < partition.size(); ++p) {
    const Party& party = partition.party(p);
    out.push_back({party.label, random_symplectic(party.modes.size(), rmax,
                                                  derive_seed(seed, p))});
  }
  return out;
}

PartitionedState assemble(const NetworkTopology& topology,
                          std::span<const TwoModeSource> sources,
                          std::span<const LocalBlock> locals) {
  if (sources.size() != topology.sources()) {
    throw Error(ErrorKind::InvalidArgument,
                topology.name() + " needs " +
                    std::to_string(topology.sources()) + " sources, got " +
                    std::to_string(sources.size()));
  }
  Matrix product = two_mode_source(sources[0]).matrix();
  for (std::size_t s = 1; s < sources.size(); ++s) {
    product = direct_sum(product, two_mode_source(sources[s]).matrix());
  }

  std::vector<std::size_t> order;
  for (const auto& party : topology.layout()) {
    for (const ModeSlot& slot : party) order.push_back(2 * slot.source + slot.end);
  }
  ModePartition partition = topology.partition();
  CovarianceMatrix v = permute_modes(CovarianceMatrix(std::move(product)), order);

  if (!locals.empty()) {
    std::vector<LocalBlock> blocks(locals.begin(), locals.end());
    for (const Party& party : partition.parties()) {
      const bool present =
          std::any_of(blocks.begin(), blocks.end(),
                      [&](const LocalBlock& b) { return b.party == party.label; });
      if (!present) {
        blocks.push_back(
            {party.label, SymplecticMatrix::identity(party.modes.size())});
      }
    }
    try {
      v = apply_symplectic(v, embed_local(blocks, partition));
    } catch (const Error& e) {
      throw Error(ErrorKind::InvalidArgument, e.what());
    }
  }
  return PartitionedState(std::move(v), std::move(partition));
}

// ---------------------------------------------------------------------------
// Fully symmetric family

SymplecticSpectrum symmetric_spectrum_closed_form(
    const SymmetricFamilyParams& params) {
  const std::size_t n = params.modes;
  if (n == 0) throw Error(ErrorKind::Domain, "symmetric family needs modes >= 1");
  const double b = params.b;
  const double k = static_cast<double>(n - 1);
  const double minus_sq = (b - params.e1) * (b - params.e2);
  const double plus_sq = (b + k * params.e1) * (b + k * params.e2);
  if (plus_sq < 0.0 || (n > 1 && minus_sq < 0.0)) {
    std::ostringstream os;
    os << "negative radicand in symmetric spectrum (v_-^2 = " << minus_sq
       << ", v_+^2 = " << plus_sq << ")";
    throw Error(ErrorKind::Domain, os.str());
  }
  SymplecticSpectrum spectrum;
  spectrum.values.push_back(std::sqrt(plus_sq));
  for (std::size_t i = 1; i < n; ++i) {
    spectrum.values.push_back(std::sqrt(minus_sq));
  }
  std::sort(spectrum.values.begin(), spectrum.values.end(),
            std::greater<double>());
  return spectrum;
}

CovarianceMatrix symmetric_cm(const SymmetricFamilyParams& params,
                              double tol) {
  const std::size_t n = params.modes;
  if (n == 0 || n > kMaxModes) {
    throw Error(ErrorKind::InvalidArgument,
                "symmetric family needs 1.." + std::to_string(kMaxModes) +
                    " modes");
  }
  const double b = params.b;
  const double e1 = params.e1;
  const double e2 = params.e2;
  const double k = static_cast<double>(n - 1);
  // x and p blocks are (b - e) I + e J; both must be positive definite.
  const bool blocks_pd = b + k * e1 > 0.0 && b + k * e2 > 0.0 &&
                         (n == 1 || (b - e1 > 0.0 && b - e2 > 0.0));
  if (!blocks_pd) {
    std::ostringstream os;
    os << "symmetric parameters b=" << b << " e1=" << e1 << " e2=" << e2
       << " do not give a positive-definite matrix";
    throw Error(ErrorKind::UnphysicalParameter, os.str());
  }
  const auto spectrum = symmetric_spectrum_closed_form(params);
  if (spectrum.min() < 1.0 - tol) {
    std::ostringstream os;
    os << "symmetric parameters are unphysical: symplectic eigenvalue "
       << spectrum.min() << " < 1";
    throw Error(ErrorKind::UnphysicalParameter, os.str());
  }
  const auto dim = static_cast<Eigen::Index>(2 * n);
  Matrix v(dim, dim);
  for (Eigen::Index i = 0; i < dim; i += 2) {
    for (Eigen::Index j = 0; j < dim; j += 2) {
      const bool diag = i == j;
      v(i, j) = diag ? b : e1;
      v(i + 1, j + 1) = diag ? b : e2;
      v(i, j + 1) = 0.0;
      v(i + 1, j) = 0.0;
    }
  }
  return CovarianceMatrix(std::move(v));
}

std::pair<double, double> pure_symmetric_params(std::size_t modes, double b) {
  if (modes < 2) {
    throw Error(ErrorKind::Domain, "pure symmetric parameters need >= 2 modes");
  }
  if (!(b >= 1.0) || !std::isfinite(b)) {
    std::ostringstream os;
    os << "pure symmetric parameters need b >= 1, got " << b;
    throw Error(ErrorKind::Domain, os.str());
  }
  // (b - e1)(b - e2) = 1 and (b + k e1)(b + k e2) = 1 with k = n - 1 give
  // e1 e2 = (1 - b^2)/k and e1 + e2 = -(k - 1) e1 e2 / b.
  const double k = static_cast<double>(modes - 1);
  const double product = (1.0 - b * b) / k;
  const double sum = -(k - 1.0) * product / b;
  const double disc = sum * sum - 4.0 * product;
  if (disc < 0.0) {
    throw Error(ErrorKind::Domain, "no real pure symmetric parameters");
  }
  const double root = std::sqrt(disc);
  if (root == 0.0) return {0.5 * sum, 0.5 * sum};
  // Cancellation-free quadratic roots.
  const double q = 0.5 * (sum + std::copysign(root, sum == 0.0 ? 1.0 : sum));
  double e1 = q;
  double e2 = product / q;
  if (e1 < e2) std::swap(e1, e2);
  return {e1, e2};
}

}  // namespace gqn
