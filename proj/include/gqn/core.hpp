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

// Covariance-matrix substrate for zero-mean Gaussian states.
//
// Mode ordering is (x1, p1, x2, p2, ..., xm, pm) everywhere; the vacuum has
// covariance matrix equal to the identity, so a state is physical iff all of
// its symplectic eigenvalues are >= 1.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace gqn {

using Matrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class ErrorKind {
  InvalidArgument,
  Shape,
  Data,
  Numeric,
  Key,
  Capacity,
  UnphysicalParameter,
  Domain,
  UnsupportedCase,
  Parse,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline constexpr std::size_t kMaxModes = 16;
inline constexpr double kDefaultPhysicalityTol = 1e-9;
inline constexpr double kSymplecticTol = 1e-10;
inline constexpr double kSpectrumPairingTol = 1e-8;

/// A 2m x 2m real matrix holding the second moments of an m-mode state.
///
/// Construction checks shape (square, even, m <= kMaxModes) and that every
/// entry is finite. Physicality is not enforced here; see validate().
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(Matrix entries);

  static CovarianceMatrix identity(std::size_t modes);

  std::size_t modes() const noexcept { return modes_; }
  std::size_t dim() const noexcept { return 2 * modes_; }
  const Matrix& matrix() const noexcept { return entries_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

 private:
  Matrix entries_;
  std::size_t modes_ = 0;
};

/// Real 2m x 2m matrix S with S Omega S^T = Omega; the covariance-level
/// action of a Gaussian unitary.
class SymplecticMatrix {
 public:
  explicit SymplecticMatrix(Matrix entries, double tol = kSymplecticTol);

  static SymplecticMatrix identity(std::size_t modes);
  /// Single-mode squeezer diag(e^r, e^-r).
  static SymplecticMatrix squeezer(double r);

  std::size_t modes() const noexcept { return modes_; }
  const Matrix& matrix() const noexcept { return entries_; }

  /// max |S Omega S^T - Omega| over all entries.
  static double symplectic_residual(const Matrix& s);

 private:
  Matrix entries_;
  std::size_t modes_ = 0;
};

struct SymplecticSpectrum {
  // Sorted descending, one value per mode.
  std::vector<double> values;

  double min() const { return values.empty() ? 0.0 : values.back(); }
  double max() const { return values.empty() ? 0.0 : values.front(); }
};

struct Party {
  std::string label;
  std::vector<std::size_t> modes;
};

/// Assignment of mode indices to named parties. Index lists are disjoint,
/// non-empty and together cover {0, ..., modes-1}.
class ModePartition {
 public:
  ModePartition(std::vector<Party> parties, std::size_t total_modes);

  /// Consecutive blocks of the given sizes labelled <prefix>1, <prefix>2, ...
  static ModePartition from_sizes(std::span<const std::size_t> sizes,
                                  std::string_view prefix = "A");

  std::size_t size() const noexcept { return parties_.size(); }
  std::size_t modes() const noexcept { return total_modes_; }
  const std::vector<Party>& parties() const noexcept { return parties_; }
  const Party& party(std::size_t index) const { return parties_.at(index); }

  /// Throws ErrorKind::Key for unknown labels.
  std::size_t index_of(std::string_view label) const;
  std::uint32_t mask_of(std::span<const std::string> labels) const;
  /// Modes owned by the parties in `mask`, ascending.
  std::vector<std::size_t> modes_of_mask(std::uint32_t mask) const;

 private:
  std::vector<Party> parties_;
  std::size_t total_modes_ = 0;
};

struct LocalBlock {
  std::string party;
  SymplecticMatrix symplectic;
};

struct Validation {
  std::size_t modes = 0;
  bool symmetric = false;
  double max_asymmetry = 0.0;
  bool positive_definite = false;
  SymplecticSpectrum spectrum;  // empty unless positive_definite
  double min_symplectic_eigenvalue = 0.0;
  double det = 0.0;
  double log_det = 0.0;
  bool pure = false;
  bool physical = false;
};

/// Symplectic form: direct sum of m blocks [[0, 1], [-1, 0]].
Matrix omega(std::size_t modes);

/// Shape/data/symmetry/physicality verdict. Throws Shape for non-square or
/// odd dimension, Data for non-finite entries.
Validation validate(const Matrix& v, double tol = kDefaultPhysicalityTol);
Validation validate(const CovarianceMatrix& v,
                    double tol = kDefaultPhysicalityTol);

/// Moduli of the eigenvalues of i Omega V, one per mode, descending.
SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& v);

/// ln det of a symmetric positive-definite matrix via Cholesky.
double log_det(const Matrix& v);
double log_det(const CovarianceMatrix& v);

CovarianceMatrix reduce_modes(const CovarianceMatrix& v,
                              std::span<const std::size_t> modes);
CovarianceMatrix reduce(const CovarianceMatrix& v, const ModePartition& p,
                        std::span<const std::string> parties);

/// S V S^T.
CovarianceMatrix apply_symplectic(const CovarianceMatrix& v,
                                  const SymplecticMatrix& s);

/// Block-diagonal symplectic acting on each party's modes in place.
SymplecticMatrix embed_local(std::span<const LocalBlock> blocks,
                             const ModePartition& p);

Matrix direct_sum(const Matrix& a, const Matrix& b);
CovarianceMatrix direct_sum(const CovarianceMatrix& a,
                            const CovarianceMatrix& b);
SymplecticMatrix direct_sum(const SymplecticMatrix& a,
                            const SymplecticMatrix& b);

/// Reorders modes so that new mode k is old mode order[k].
CovarianceMatrix permute_modes(const CovarianceMatrix& v,
                               std::span<const std::size_t> order);

}  // namespace gqn
