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

#include <array>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "gqn/measures.hpp"
#include "gqn/networks.hpp"
#include "oracles.hpp"

namespace gqn {
namespace {

// ln cosh 1, 2 ln cosh 1, 1 - cosh(1)^-4 and g(cosh 1), evaluated in
// extended precision and frozen.
constexpr double kLnCosh1 = 0.4337808304830272;
constexpr double kTwoLnCosh1 = 0.8675616609660544;
constexpr double kMTmsvHalf = 0.8236215523858653;
constexpr double kEntropyTmsvHalf = 0.6594529591680367;

Matrix tmsv(double r) {
  const double c = std::cosh(2 * r);
  const double s = std::sinh(2 * r);
  Matrix v(4, 4);
  v << c, 0, s, 0,
       0, c, 0, -s,
       s, 0, c, 0,
       0, -s, 0, c;
  return v;
}

PartitionedState single_mode_parties(const Matrix& v) {
  const std::size_t m = static_cast<std::size_t>(v.rows() / 2);
  std::vector<std::size_t> sizes(m, 1);
  return PartitionedState(CovarianceMatrix(v), ModePartition::from_sizes(sizes));
}

long double s2(const Matrix& v, std::vector<std::size_t> modes) {
  return 0.5L * std::log(oracle::determinant(oracle::partial_trace(v, modes)));
}

TEST(FrozenOracles, Reproduce) {
  const long double c = std::cosh(1.0L);
  EXPECT_NEAR(kLnCosh1, static_cast<double>(std::log(c)), 1e-16);
  EXPECT_NEAR(kTwoLnCosh1, static_cast<double>(2.0L * std::log(c)), 1e-16);
  EXPECT_NEAR(kMTmsvHalf, static_cast<double>(1.0L - 1.0L / (c * c * c * c)), 1e-16);
  EXPECT_NEAR(kEntropyTmsvHalf, static_cast<double>(oracle::thermal_entropy(c)), 1e-16);
}

TEST(Renyi2, Examples) {
  EXPECT_EQ(renyi2_entropy(CovarianceMatrix::identity(3)), 0.0);
  EXPECT_NEAR(renyi2_entropy(CovarianceMatrix(Matrix(2.7 * Matrix::Identity(2, 2)))),
              std::log(2.7), 1e-15);
  const CovarianceMatrix a(oracle::partial_trace(tmsv(0.5), {0}));
  EXPECT_NEAR(renyi2_entropy(a), kLnCosh1, 1e-15);
}

TEST(Renyi2, UnphysicalThrows) {
  try {
    renyi2_entropy(CovarianceMatrix(Matrix(0.5 * Matrix::Identity(2, 2))));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Numeric);
  }
}

TEST(VonNeumann, Examples) {
  EXPECT_EQ(von_neumann_entropy(CovarianceMatrix::identity(4)), 0.0);
  EXPECT_NEAR(von_neumann_entropy(CovarianceMatrix(Matrix(3.0 * Matrix::Identity(2, 2)))),
              1.3862943611198906, 1e-14);
  EXPECT_EQ(von_neumann_term(1.0 + 1e-12), 0.0);
  EXPECT_EQ(von_neumann_term(1.0 - 1e-12), 0.0);
  EXPECT_FALSE(std::isnan(von_neumann_term(1.0)));
  EXPECT_THROW(von_neumann_term(0.9), Error);
}

TEST(VonNeumann, TermMatchesClosedForm) {
  for (double nu : {1.001, 1.5, 2.0, 7.3, 40.0}) {
    EXPECT_NEAR(von_neumann_term(nu), static_cast<double>(oracle::thermal_entropy(nu)),
                1e-13 * (1.0 + nu));
  }
}

TEST(Additivity, EntropiesOverDirectSums) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CovarianceMatrix a(oracle::random_state(1 + seed % 3, 0.5, 2.5, seed));
    const CovarianceMatrix b(oracle::random_state(1 + seed % 2, 0.5, 2.5, 40 + seed));
    const CovarianceMatrix ab = direct_sum(a, b);
    EXPECT_NEAR(renyi2_entropy(ab), renyi2_entropy(a) + renyi2_entropy(b), 1e-10);
    EXPECT_NEAR(von_neumann_entropy(ab), von_neumann_entropy(a) + von_neumann_entropy(b),
                1e-10);
  }
}

TEST(MutualInformation, Examples) {
  const std::array<std::size_t, 3> sizes{1, 2, 1};
  EXPECT_EQ(mutual_information(PartitionedState(CovarianceMatrix::identity(4),
                                                ModePartition::from_sizes(sizes))),
            0.0);
  EXPECT_NEAR(mutual_information(single_mode_parties(tmsv(0.5))), kTwoLnCosh1, 1e-14);
}

TEST(MutualInformation, SinglePartyRejected) {
  const std::array<std::size_t, 1> sizes{2};
  const PartitionedState s(CovarianceMatrix::identity(2), ModePartition::from_sizes(sizes));
  EXPECT_THROW(mutual_information(s), Error);
}

TEST(MutualInformation, BipartiteAndTripartiteSpecializations) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Matrix v2 = oracle::random_state(2, 0.7, 2.0, 100 + seed);
    const long double i2 = s2(v2, {0}) + s2(v2, {1}) - s2(v2, {0, 1});
    EXPECT_NEAR(mutual_information(single_mode_parties(v2)), static_cast<double>(i2), 1e-12);

    const Matrix v3 = oracle::random_state(3, 0.7, 2.0, 200 + seed);
    const long double i3 = s2(v3, {0}) + s2(v3, {1}) + s2(v3, {2}) - s2(v3, {0, 1}) -
                           s2(v3, {0, 2}) - s2(v3, {1, 2}) + s2(v3, {0, 1, 2});
    EXPECT_NEAR(mutual_information(single_mode_parties(v3)), static_cast<double>(i3), 1e-12);
  }
}

TEST(MutualInformation, OddPartitePureVanishes) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    for (std::size_t m : {3u, 5u}) {
      const Matrix v = oracle::random_state(m, 0.8, 1.0, 300 + seed);
      EXPECT_LE(std::abs(mutual_information(single_mode_parties(v))), 1e-7);
    }
  }
}

TEST(MutualInformation, LocalUnitaryInvariance) {
  const std::array<std::size_t, 3> sizes{2, 1, 2};
  const ModePartition p = ModePartition::from_sizes(sizes);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const CovarianceMatrix v(oracle::random_state(5, 0.6, 2.0, 400 + seed));
    std::vector<LocalBlock> blocks;
    for (std::size_t i = 0; i < 3; ++i) {
      blocks.push_back({p.party(i).label, random_symplectic(sizes[i], 1.0, seed + 10 * i)});
    }
    const PartitionedState a(v, p);
    const PartitionedState b(apply_symplectic(v, embed_local(blocks, p)), p);
    EXPECT_NEAR(mutual_information(a), mutual_information(b), 1e-7);
  }
}

TEST(MMeasure, Examples) {
  EXPECT_EQ(m_measure(single_mode_parties(Matrix::Identity(4, 4))), 0.0);
  EXPECT_NEAR(m_measure(single_mode_parties(tmsv(0.5))), kMTmsvHalf, 1e-14);
}

TEST(MMeasure, PureBipartiteFormula) {
  const std::array<std::size_t, 2> sizes{2, 1};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Matrix v = oracle::random_state(3, 0.6, 1.0, 500 + seed);
    const PartitionedState s(CovarianceMatrix(v), ModePartition::from_sizes(sizes));
    const long double da = oracle::determinant(oracle::partial_trace(v, {0, 1}));
    EXPECT_NEAR(m_measure(s), static_cast<double>(1.0L - 1.0L / (da * da)), 1e-10);
  }
}

TEST(MMeasure, RequiresTwoParties) {
  EXPECT_THROW(m_measure(single_mode_parties(Matrix::Identity(6, 6))), Error);
}

TEST(MMeasure, RangeAndLocalInvariance) {
  const std::array<std::size_t, 2> sizes{1, 2};
  const ModePartition p = ModePartition::from_sizes(sizes);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CovarianceMatrix v(oracle::random_state(3, 0.6, 2.0, 600 + seed));
    const double m = m_measure(PartitionedState(v, p));
    EXPECT_GE(m, -1e-12);
    EXPECT_LT(m, 1.0);
    std::vector<LocalBlock> blocks{{"A1", random_symplectic(1, 1.0, seed)},
                                   {"A2", random_symplectic(2, 1.0, seed + 99)}};
    const double w = m_measure(PartitionedState(apply_symplectic(v, embed_local(blocks, p)), p));
    EXPECT_NEAR(m, w, 1e-9);
  }
}

TEST(MMeasure, ShrinksAlongProductInterpolation) {
  const std::array<std::size_t, 2> sizes{1, 1};
  const ModePartition p = ModePartition::from_sizes(sizes);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Matrix v = oracle::random_state(2, 0.7, 1.5, 700 + seed);
    Matrix prod = v;
    prod.block(0, 2, 2, 2).setZero();
    prod.block(2, 0, 2, 2).setZero();
    double previous = -1.0;
    for (int k = 0; k <= 10; ++k) {
      const double t = k / 10.0;
      const Matrix vt = (1.0 - t) * prod + t * v;
      if (!validate(vt).physical) continue;
      const double m = m_measure(PartitionedState(CovarianceMatrix(vt), p));
      if (k == 0) EXPECT_NEAR(m, 0.0, 1e-15);
      EXPECT_GE(m, previous - 1e-12);
      previous = m;
    }
  }
}

TEST(SquashedPure, Examples) {
  EXPECT_NEAR(squashed_entanglement_pure(single_mode_parties(tmsv(0.5))), kEntropyTmsvHalf,
              1e-12);
  EXPECT_EQ(squashed_entanglement_pure(single_mode_parties(Matrix::Identity(4, 4))), 0.0);
}

TEST(SquashedPure, MixedRejected) {
  try {
    squashed_entanglement_pure(single_mode_parties(Matrix(1.2 * Matrix::Identity(4, 4))));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedCase);
  }
}

TEST(SquashedPure, SymmetricInParties) {
  const std::array<std::size_t, 2> sizes{1, 2};
  const ModePartition p = ModePartition::from_sizes(sizes);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const PartitionedState s(CovarianceMatrix(oracle::random_state(3, 0.6, 1.0, 800 + seed)),
                             p);
    EXPECT_NEAR(entanglement_entropy_pure(s, 1u), entanglement_entropy_pure(s, 2u), 1e-9);
  }
}

}  // namespace
}  // namespace gqn
