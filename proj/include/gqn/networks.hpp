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

// Network-state constructors: two-mode sources, random Gaussian unitaries at
// covariance level, triangle/star/chain assembly, and the fully symmetric
// Gaussian family.

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gqn/core.hpp"
#include "gqn/measures.hpp"

namespace gqn {

enum class TopologyKind { Triangle, Star, Chain };

/// Where one party mode comes from: end 0 or 1 of a two-mode source.
struct ModeSlot {
  std::size_t source = 0;
  std::size_t end = 0;
};

/// Triangle (3 sources, parties A B C with two modes each), star(n) (hub A1
/// holds one end of every source, A2..A{n+1} one mode each) or chain(n)
/// (A1 and A{n+1} hold one mode, inner parties two).
///
/// Source k of a triangle connects parties k and k+1 mod 3 with end 0 at
/// party k. Parties list their modes by ascending source index.
class NetworkTopology {
 public:
  static NetworkTopology triangle();
  static NetworkTopology star(std::size_t n);
  static NetworkTopology chain(std::size_t n);
  /// kind is "triangle", "star" or "chain"; n is ignored for triangles.
  static NetworkTopology parse(std::string_view kind, std::size_t n);

  TopologyKind kind() const noexcept { return kind_; }
  std::size_t sources() const noexcept { return sources_; }
  std::size_t party_count() const noexcept;
  std::size_t modes() const noexcept { return 2 * sources_; }
  std::string kind_name() const;
  /// e.g. "star(3)", "triangle".
  std::string name() const;

  std::vector<std::vector<ModeSlot>> layout() const;
  std::vector<std::string> labels() const;
  ModePartition partition() const;

 private:
  NetworkTopology(TopologyKind kind, std::size_t sources)
      : kind_(kind), sources_(sources) {}

  TopologyKind kind_;
  std::size_t sources_;
};

/// Two-mode squeezed state with symmetric thermal noise. noise == 1 gives
/// the pure two-mode squeezed vacuum.
struct TwoModeSource {
  double squeeze = 0.0;
  double noise = 1.0;
};

CovarianceMatrix two_mode_source(const TwoModeSource& src);

/// PPT criterion for the symmetric source: entangled iff noise < e^{2r}.
bool source_is_entangled(const TwoModeSource& src);

/// Haar-random m x m unitary (QR of a complex Ginibre matrix with the phases
/// of R divided out).
Eigen::MatrixXcd haar_unitary(std::size_t m, std::mt19937_64& rng);

/// Real symplectic-orthogonal image of a unitary, U = X + iY mapped to
/// interleaved blocks [[X, -Y], [Y, X]].
SymplecticMatrix passive_symplectic(const Eigen::MatrixXcd& u);

/// O1 Z O2 with Haar passive O1, O2 and single-mode squeezers
/// Z = diag(e^{r_k}, e^{-r_k}), r_k uniform in [-rmax, rmax].
SymplecticMatrix random_symplectic(std::size_t modes, double rmax,
                                   std::uint64_t seed);

/// One random_symplectic per party with seeds derived from `seed`.
std::vector<LocalBlock> random_locals(const NetworkTopology& topology,
                                      double rmax, std::uint64_t seed);

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Direct sum of the sources, permuted into party order, then acted on by
/// the party-local symplectics. Parties without a block get the identity.
PartitionedState assemble(const NetworkTopology& topology,
                          std::span<const TwoModeSource> sources,
                          std::span<const LocalBlock> locals = {});

struct SymmetricFamilyParams {
  std::size_t modes = 0;
  double b = 1.0;
  double e1 = 0.0;
  double e2 = 0.0;
};

/// n-mode matrix with diag(b, b) on the diagonal blocks and diag(e1, e2) on
/// every off-diagonal block. Throws UnphysicalParameter if not a state.
CovarianceMatrix symmetric_cm(const SymmetricFamilyParams& params,
                              double tol = kDefaultPhysicalityTol);

/// (e1, e2) with e1 >= e2 making symmetric_cm pure.
std::pair<double, double> pure_symmetric_params(std::size_t modes, double b);

/// {v_plus, v_minus x (n-1)} sorted descending.
SymplecticSpectrum symmetric_spectrum_closed_form(
    const SymmetricFamilyParams& params);

}  // namespace gqn
