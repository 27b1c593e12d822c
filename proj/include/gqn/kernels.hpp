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

// Dense inner loops used by the covariance-matrix layer. Every kernel has a
// scalar reference implementation; SIMD variants are selected once at runtime
// and must agree with the reference to rounding (see tests/test_kernels.cpp).
//
// All matrices are row-major, contiguous, n x n unless stated otherwise.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace gqn::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

struct CholeskyResult {
  bool ok = false;
  double log_det = 0.0;
  // First pivot that was not strictly positive when ok == false.
  std::size_t failed_pivot = 0;
};

using DotFn = double (*)(const double* a, const double* b, std::size_t n);
using CongruenceFn = void (*)(const double* s, const double* v, double* out,
                              double* scratch, std::size_t n);
using CholeskyFn = CholeskyResult (*)(double* a, std::size_t n);

struct KernelTable {
  Isa isa;
  DotFn dot;
  // out = S V S^T for symmetric V. scratch holds n*n doubles.
  CongruenceFn congruence;
  // In-place lower Cholesky of a symmetric positive-definite matrix; only
  // the lower triangle of `a` is read. Returns ln det via sum of 2 ln L_ii.
  CholeskyFn cholesky_log_det;
};

// Table for the best ISA available on this CPU. Chosen on first use.
const KernelTable& active();

// Table for a specific ISA, or nullptr when it is not compiled in or the CPU
// lacks it.
const KernelTable* table_for(Isa isa);

// ISAs usable on this machine, scalar first.
std::vector<Isa> available_isas();

// Convenience wrappers over active().
double dot(std::span<const double> a, std::span<const double> b);
CholeskyResult cholesky_log_det(std::span<double> a, std::size_t n);
void congruence(std::span<const double> s, std::span<const double> v,
                std::span<double> out, std::size_t n);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void congruence(const double* s, const double* v, double* out, double* scratch,
                std::size_t n);
CholeskyResult cholesky_log_det(double* a, std::size_t n);
}  // namespace scalar

#if defined(GQN_WITH_AVX2)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
void congruence(const double* s, const double* v, double* out, double* scratch,
                std::size_t n);
CholeskyResult cholesky_log_det(double* a, std::size_t n);
}  // namespace avx2
#endif

#if defined(GQN_WITH_NEON)
namespace neon {
double dot(const double* a, const double* b, std::size_t n);
void congruence(const double* s, const double* v, double* out, double* scratch,
                std::size_t n);
CholeskyResult cholesky_log_det(double* a, std::size_t n);
}  // namespace neon
#endif

}  // namespace gqn::kernels
