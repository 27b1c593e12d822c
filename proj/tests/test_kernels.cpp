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

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "gqn/kernels.hpp"
#include "oracles.hpp"

namespace gqn::kernels {
namespace {

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

std::vector<double> flatten(const Matrix& m) {
  return std::vector<double>(m.data(), m.data() + m.size());
}

TEST(Dispatch, ActiveIsAvailable) {
  const auto isas = available_isas();
  ASSERT_FALSE(isas.empty());
  EXPECT_EQ(isas.front(), Isa::Scalar);
  bool found = false;
  for (Isa isa : isas) found = found || isa == active().isa;
  EXPECT_TRUE(found) << isa_name(active().isa);
}

TEST(Dispatch, ScalarAlwaysPresent) {
  const KernelTable* t = table_for(Isa::Scalar);
  ASSERT_NE(t, nullptr);
  EXPECT_EQ(t->isa, Isa::Scalar);
  EXPECT_EQ(isa_name(Isa::Avx2), "avx2");
}

TEST(ScalarKernels, DotMatchesLongDouble) {
  for (std::size_t n = 0; n < 40; ++n) {
    const auto a = random_vector(n, 10 + n);
    const auto b = random_vector(n, 100 + n);
    long double ref = 0.0L;
    for (std::size_t i = 0; i < n; ++i) ref += static_cast<long double>(a[i]) * b[i];
    EXPECT_NEAR(scalar::dot(a.data(), b.data(), n), static_cast<double>(ref), 1e-13);
  }
}

TEST(ScalarKernels, CongruenceMatchesTripleLoop) {
  for (std::size_t modes = 1; modes <= 6; ++modes) {
    const std::size_t n = 2 * modes;
    const Matrix s = oracle::random_symplectic_product(modes, 0.7, 7 * modes);
    const Matrix v = oracle::random_spd(n, 0.5, 3.0, 11 * modes);
    const Matrix ref = oracle::congruence(s, v);
    std::vector<double> out(n * n), scratch(n * n);
    const auto sf = flatten(s);
    const auto vf = flatten(v);
    scalar::congruence(sf.data(), vf.data(), out.data(), scratch.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_NEAR(out[i * n + j], ref(i, j), 1e-11 * (1.0 + std::abs(ref(i, j))));
        EXPECT_EQ(out[i * n + j], out[j * n + i]);
      }
    }
  }
}

TEST(ScalarKernels, CholeskyLogDetMatchesDeterminant) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const Matrix a = oracle::random_spd(n, 0.3, 4.0, 300 + n);
    auto af = flatten(a);
    const CholeskyResult r = scalar::cholesky_log_det(af.data(), n);
    ASSERT_TRUE(r.ok);
    const double ref = std::log(static_cast<double>(oracle::determinant(a)));
    EXPECT_NEAR(r.log_det, ref, 1e-12 * (1.0 + std::abs(ref)));
  }
}

TEST(ScalarKernels, CholeskyReportsFailedPivot) {
  // Leading 2x2 block is fine, the third pivot is 1 - 4 < 0.
  std::vector<double> a = {1, 0, 0, 0, 1, 0, 2, 0, 1};
  const CholeskyResult r = scalar::cholesky_log_det(a.data(), 3);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.failed_pivot, 2u);
}

class IsaEquivalence : public ::testing::TestWithParam<Isa> {};

TEST_P(IsaEquivalence, Dot) {
  const KernelTable* t = table_for(GetParam());
  ASSERT_NE(t, nullptr);
  for (std::size_t n = 0; n < 70; ++n) {
    const auto a = random_vector(n, 1000 + n);
    const auto b = random_vector(n, 2000 + n);
    const double ref = scalar::dot(a.data(), b.data(), n);
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale += std::abs(a[i] * b[i]);
    EXPECT_NEAR(t->dot(a.data(), b.data(), n), ref, 4e-16 * (scale + 1.0)) << n;
  }
}

TEST_P(IsaEquivalence, Congruence) {
  const KernelTable* t = table_for(GetParam());
  ASSERT_NE(t, nullptr);
  for (std::size_t modes = 1; modes <= 16; ++modes) {
    const std::size_t n = 2 * modes;
    const auto sf = flatten(oracle::random_symplectic_product(modes, 0.5, 17 * modes));
    const auto vf = flatten(oracle::random_spd(n, 0.5, 3.0, 19 * modes));
    std::vector<double> ref(n * n), out(n * n), scratch(n * n);
    scalar::congruence(sf.data(), vf.data(), ref.data(), scratch.data(), n);
    t->congruence(sf.data(), vf.data(), out.data(), scratch.data(), n);
    for (std::size_t i = 0; i < n * n; ++i) {
      EXPECT_NEAR(out[i], ref[i], 1e-12 * (1.0 + std::abs(ref[i]))) << modes;
    }
  }
}

TEST_P(IsaEquivalence, Cholesky) {
  const KernelTable* t = table_for(GetParam());
  ASSERT_NE(t, nullptr);
  for (std::size_t n = 1; n <= 32; ++n) {
    auto a = flatten(oracle::random_spd(n, 0.2, 5.0, 500 + n));
    auto b = a;
    const CholeskyResult ra = scalar::cholesky_log_det(a.data(), n);
    const CholeskyResult rb = t->cholesky_log_det(b.data(), n);
    ASSERT_EQ(ra.ok, rb.ok);
    EXPECT_NEAR(ra.log_det, rb.log_det, 1e-12 * (1.0 + std::abs(ra.log_det)));
  }
  std::vector<double> bad = {1, 0, 0, 0, 1, 0, 2, 0, 1};
  const CholeskyResult r = t->cholesky_log_det(bad.data(), 3);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.failed_pivot, 2u);
}

INSTANTIATE_TEST_SUITE_P(AllIsas, IsaEquivalence,
                         ::testing::ValuesIn(available_isas()),
                         [](const auto& info) {
                           return std::string(isa_name(info.param));
                         });

}  // namespace

void PrintTo(Isa isa, std::ostream* os) { *os << isa_name(isa); }

}  // namespace gqn::kernels
