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

#include "gqn/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "gqn/kernels.hpp"

namespace gqn {

namespace {

std::size_t checked_modes(const Matrix& m, std::string_view what) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << " must be square, got " << m.rows() << "x" << m.cols();
    throw Error(ErrorKind::Shape, os.str());
  }
  if (m.rows() == 0 || m.rows() % 2 != 0) {
    std::ostringstream os;
    os << what << " dimension must be a positive even number, got "
       << m.rows();
    throw Error(ErrorKind::Shape, os.str());
  }
  if (!m.allFinite()) {
    throw Error(ErrorKind::Data, std::string(what) + " has non-finite entries");
  }
  const auto modes = static_cast<std::size_t>(m.rows() / 2);
  if (modes > kMaxModes) {
    std::ostringstream os;
    os << what << " has " << modes << " modes; at most " << kMaxModes
       << " are supported";
    throw Error(ErrorKind::Capacity, os.str());
  }
  return modes;
}

double max_asymmetry(const Matrix& v) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < v.cols(); ++j) {
      const double scale = std::max(1.0, std::abs(v(i, j)));
      worst = std::max(worst, std::abs(v(i, j) - v(j, i)) / scale);
    }
  }
  return worst;
}

kernels::CholeskyResult cholesky(const Matrix& v) {
  std::vector<double> buffer(v.data(), v.data() + v.size());
  return kernels::cholesky_log_det(buffer, static_cast<std::size_t>(v.rows()));
}

[[noreturn]] void throw_not_pd(const kernels::CholeskyResult& r,
                               Eigen::Index n) {
  std::ostringstream os;
  os << "matrix is not positive definite (Cholesky pivot " << r.failed_pivot
     << " of " << n << " is not positive)";
  throw Error(ErrorKind::Numeric, os.str());
}

std::vector<Eigen::Index> quadrature_indices(
    std::span<const std::size_t> modes) {
  std::vector<Eigen::Index> idx;
  idx.reserve(2 * modes.size());
  for (std::size_t m : modes) {
    idx.push_back(static_cast<Eigen::Index>(2 * m));
    idx.push_back(static_cast<Eigen::Index>(2 * m + 1));
  }
  return idx;
}

Matrix submatrix(const Matrix& v, const std::vector<Eigen::Index>& idx) {
  const auto n = static_cast<Eigen::Index>(idx.size());
  Matrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = v(idx[i], idx[j]);
  }
  return out;
}

}  // namespace

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::Data: return "data";
    case ErrorKind::Numeric: return "numeric";
    case ErrorKind::Key: return "key";
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::UnphysicalParameter: return "unphysical-parameter";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::UnsupportedCase: return "unsupported-case";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// CovarianceMatrix / SymplecticMatrix

CovarianceMatrix::CovarianceMatrix(Matrix entries)
    : entries_(std::move(entries)) {
  modes_ = checked_modes(entries_, "covariance matrix");
}

CovarianceMatrix CovarianceMatrix::identity(std::size_t modes) {
  const auto n = static_cast<Eigen::Index>(2 * modes);
  return CovarianceMatrix(Matrix::Identity(n, n));
}

SymplecticMatrix::SymplecticMatrix(Matrix entries, double tol)
    : entries_(std::move(entries)) {
  modes_ = checked_modes(entries_, "symplectic matrix");
  const double residual = symplectic_residual(entries_);
  if (!(residual <= tol)) {
    std::ostringstream os;
    os << "matrix is not symplectic: max |S Omega S^T - Omega| = " << residual;
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
}

SymplecticMatrix SymplecticMatrix::identity(std::size_t modes) {
  const auto n = static_cast<Eigen::Index>(2 * modes);
  return SymplecticMatrix(Matrix::Identity(n, n));
}

SymplecticMatrix SymplecticMatrix::squeezer(double r) {
  Matrix s = Matrix::Zero(2, 2);
  s(0, 0) = std::exp(r);
  s(1, 1) = std::exp(-r);
  return SymplecticMatrix(std::move(s));
}

double SymplecticMatrix::symplectic_residual(const Matrix& s) {
  const Matrix w = omega(static_cast<std::size_t>(s.rows() / 2));
  return (s * w * s.transpose() - w).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// ModePartition

ModePartition::ModePartition(std::vector<Party> parties,
                             std::size_t total_modes)
    : parties_(std::move(parties)), total_modes_(total_modes) {
  if (parties_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "partition has no parties");
  }
  if (total_modes_ > kMaxModes) {
    throw Error(ErrorKind::Capacity, "partition covers more than " +
                                         std::to_string(kMaxModes) + " modes");
  }
  std::vector<int> owner(total_modes_, -1);
  for (std::size_t p = 0; p < parties_.size(); ++p) {
    const Party& party = parties_[p];
    if (party.modes.empty()) {
      throw Error(ErrorKind::InvalidArgument,
                  "party '" + party.label + "' owns no modes");
    }
    for (std::size_t q = 0; q < p; ++q) {
      if (parties_[q].label == party.label) {
        throw Error(ErrorKind::InvalidArgument,
                    "duplicate party label '" + party.label + "'");
      }
    }
    for (std::size_t m : party.modes) {
      if (m >= total_modes_) {
        throw Error(ErrorKind::InvalidArgument,
                    "party '" + party.label + "' references mode " +
                        std::to_string(m) + " outside 0.." +
                        std::to_string(total_modes_ - 1));
      }
      if (owner[m] != -1) {
        throw Error(ErrorKind::InvalidArgument,
                    "mode " + std::to_string(m) + " is owned by two parties");
      }
      owner[m] = static_cast<int>(p);
    }
  }
  for (std::size_t m = 0; m < total_modes_; ++m) {
    if (owner[m] == -1) {
      throw Error(ErrorKind::InvalidArgument,
                  "mode " + std::to_string(m) + " is not owned by any party");
    }
  }
}

ModePartition ModePartition::from_sizes(std::span<const std::size_t> sizes,
                                        std::string_view prefix) {
  std::vector<Party> parties;
  std::size_t next = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    Party party{std::string(prefix) + std::to_string(i + 1), {}};
    for (std::size_t k = 0; k < sizes[i]; ++k) party.modes.push_back(next++);
    parties.push_back(std::move(party));
  }
  return ModePartition(std::move(parties), next);
}

std::size_t ModePartition::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < parties_.size(); ++i) {
    if (parties_[i].label == label) return i;
  }
  throw Error(ErrorKind::Key, "unknown party '" + std::string(label) + "'");
}

std::uint32_t ModePartition::mask_of(
    std::span<const std::string> labels) const {
  std::uint32_t mask = 0;
  for (const auto& label : labels) mask |= 1u << index_of(label);
  return mask;
}

std::vector<std::size_t> ModePartition::modes_of_mask(
    std::uint32_t mask) const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < parties_.size(); ++p) {
    if (mask & (1u << p)) {
      out.insert(out.end(), parties_[p].modes.begin(), parties_[p].modes.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Operations

Matrix omega(std::size_t modes) {
  if (modes == 0) {
    throw Error(ErrorKind::InvalidArgument, "omega needs at least one mode");
  }
  const auto n = static_cast<Eigen::Index>(2 * modes);
  Matrix w = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; k += 2) {
    w(k, k + 1) = 1.0;
    w(k + 1, k) = -1.0;
  }
  return w;
}

SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& v) {
  const Matrix& m = v.matrix();
  const auto chol = cholesky(m);
  if (!chol.ok) throw_not_pd(chol, m.rows());

  const Eigen::MatrixXd w_v = omega(v.modes()) * m;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(w_v, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::Numeric, "eigenvalue iteration of Omega V failed");
  }
  std::vector<double> moduli;
  moduli.reserve(static_cast<std::size_t>(w_v.rows()));
  for (Eigen::Index k = 0; k < w_v.rows(); ++k) {
    moduli.push_back(std::abs(solver.eigenvalues()(k)));
  }
  std::sort(moduli.begin(), moduli.end());

  // Eigenvalues come in conjugate pairs +-i nu.
  SymplecticSpectrum spectrum;
  for (std::size_t k = 0; k < moduli.size(); k += 2) {
    const double a = moduli[k];
    const double b = moduli[k + 1];
    if (std::abs(a - b) > kSpectrumPairingTol * std::max(1.0, b)) {
      std::ostringstream os;
      os << "eigenvalues of Omega V do not pair up: " << a << " vs " << b;
      throw Error(ErrorKind::Numeric, os.str());
    }
    spectrum.values.push_back(0.5 * (a + b));
  }
  std::sort(spectrum.values.begin(), spectrum.values.end(),
            std::greater<double>());
  return spectrum;
}

Validation validate(const Matrix& v, double tol) {
  Validation out;
  out.modes = checked_modes(v, "covariance matrix");
  out.max_asymmetry = max_asymmetry(v);
  out.symmetric = out.max_asymmetry <= 1e-12;

  const Matrix sym = 0.5 * (v + v.transpose());
  const auto chol = cholesky(sym);
  out.positive_definite = chol.ok;
  if (!chol.ok) {
    out.min_symplectic_eigenvalue = 0.0;
    out.det = sym.determinant();
    out.log_det = -std::numeric_limits<double>::infinity();
    return out;
  }
  out.log_det = chol.log_det;
  out.det = std::exp(chol.log_det);
  out.spectrum = symplectic_spectrum(CovarianceMatrix(sym));
  out.min_symplectic_eigenvalue = out.spectrum.min();
  out.physical = out.symmetric && out.min_symplectic_eigenvalue >= 1.0 - tol;
  out.pure = out.physical && std::abs(out.det - 1.0) <= tol;
  return out;
}

Validation validate(const CovarianceMatrix& v, double tol) {
  return validate(v.matrix(), tol);
}

double log_det(const Matrix& v) {
  if (v.rows() != v.cols()) {
    throw Error(ErrorKind::Shape, "log_det needs a square matrix");
  }
  if (v.rows() == 0) return 0.0;
  const auto chol = cholesky(v);
  if (!chol.ok) throw_not_pd(chol, v.rows());
  return chol.log_det;
}

double log_det(const CovarianceMatrix& v) { return log_det(v.matrix()); }

CovarianceMatrix reduce_modes(const CovarianceMatrix& v,
                              std::span<const std::size_t> modes) {
  if (modes.empty()) {
    throw Error(ErrorKind::InvalidArgument, "reduction to an empty mode set");
  }
  for (std::size_t m : modes) {
    if (m >= v.modes()) {
      throw Error(ErrorKind::InvalidArgument,
                  "mode " + std::to_string(m) + " out of range");
    }
  }
  return CovarianceMatrix(submatrix(v.matrix(), quadrature_indices(modes)));
}

CovarianceMatrix reduce(const CovarianceMatrix& v, const ModePartition& p,
                        std::span<const std::string> parties) {
  if (parties.empty()) {
    throw Error(ErrorKind::InvalidArgument, "reduction to no parties");
  }
  if (p.modes() != v.modes()) {
    throw Error(ErrorKind::Shape, "partition does not match matrix modes");
  }
  const auto modes = p.modes_of_mask(p.mask_of(parties));
  return reduce_modes(v, modes);
}

CovarianceMatrix apply_symplectic(const CovarianceMatrix& v,
                                  const SymplecticMatrix& s) {
  if (s.modes() != v.modes()) {
    throw Error(ErrorKind::Shape,
                "symplectic acts on " + std::to_string(s.modes()) +
                    " modes, state has " + std::to_string(v.modes()));
  }
  const std::size_t n = v.dim();
  Matrix out(n, n);
  kernels::congruence({s.matrix().data(), n * n}, {v.matrix().data(), n * n},
                      {out.data(), n * n}, n);
  return CovarianceMatrix(std::move(out));
}

SymplecticMatrix embed_local(std::span<const LocalBlock> blocks,
                             const ModePartition& p) {
  std::vector<const LocalBlock*> by_party(p.size(), nullptr);
  for (const LocalBlock& block : blocks) {
    const std::size_t idx = p.index_of(block.party);
    if (by_party[idx] != nullptr) {
      throw Error(ErrorKind::Key,
                  "two blocks for party '" + block.party + "'");
    }
    const std::size_t want = p.party(idx).modes.size();
    if (block.symplectic.modes() != want) {
      throw Error(ErrorKind::Shape, "block for party '" + block.party +
                                        "' acts on " +
                                        std::to_string(block.symplectic.modes()) +
                                        " modes, party owns " +
                                        std::to_string(want));
    }
    by_party[idx] = &block;
  }
  const auto n = static_cast<Eigen::Index>(2 * p.modes());
  Matrix s = Matrix::Zero(n, n);
  for (std::size_t idx = 0; idx < p.size(); ++idx) {
    if (by_party[idx] == nullptr) {
      throw Error(ErrorKind::Key,
                  "no block for party '" + p.party(idx).label + "'");
    }
    const auto q = quadrature_indices(p.party(idx).modes);
    const Matrix& local = by_party[idx]->symplectic.matrix();
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = 0; j < q.size(); ++j) {
        s(q[i], q[j]) = local(static_cast<Eigen::Index>(i),
                              static_cast<Eigen::Index>(j));
      }
    }
  }
  return SymplecticMatrix(std::move(s));
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

CovarianceMatrix direct_sum(const CovarianceMatrix& a,
                            const CovarianceMatrix& b) {
  return CovarianceMatrix(direct_sum(a.matrix(), b.matrix()));
}

SymplecticMatrix direct_sum(const SymplecticMatrix& a,
                            const SymplecticMatrix& b) {
  return SymplecticMatrix(direct_sum(a.matrix(), b.matrix()));
}

CovarianceMatrix permute_modes(const CovarianceMatrix& v,
                               std::span<const std::size_t> order) {
  if (order.size() != v.modes()) {
    throw Error(ErrorKind::Shape, "permutation length does not match modes");
  }
  std::vector<bool> seen(order.size(), false);
  for (std::size_t m : order) {
    if (m >= order.size() || seen[m]) {
      throw Error(ErrorKind::InvalidArgument, "order is not a permutation");
    }
    seen[m] = true;
  }
  return CovarianceMatrix(submatrix(v.matrix(), quadrature_indices(order)));
}

}  // namespace gqn
