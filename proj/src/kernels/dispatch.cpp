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

#include <cassert>

#include "gqn/kernels.hpp"

namespace gqn::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &scalar::dot, &scalar::congruence,
                              &scalar::cholesky_log_det};

#if defined(GQN_WITH_AVX2)
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::dot, &avx2::congruence,
                            &avx2::cholesky_log_det};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

#if defined(GQN_WITH_NEON)
// Advanced SIMD is mandatory on AArch64.
constexpr KernelTable kNeon{Isa::Neon, &neon::dot, &neon::congruence,
                            &neon::cholesky_log_det};
#endif

const KernelTable& select() {
#if defined(GQN_WITH_AVX2)
  if (cpu_has_avx2()) return kAvx2;
#endif
#if defined(GQN_WITH_NEON)
  return kNeon;
#endif
  return kScalar;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

const KernelTable* table_for(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return &kScalar;
    case Isa::Avx2:
#if defined(GQN_WITH_AVX2)
      if (cpu_has_avx2()) return &kAvx2;
#endif
      return nullptr;
    case Isa::Neon:
#if defined(GQN_WITH_NEON)
      return &kNeon;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (table_for(isa) != nullptr) out.push_back(isa);
  }
  return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return active().dot(a.data(), b.data(), a.size());
}

CholeskyResult cholesky_log_det(std::span<double> a, std::size_t n) {
  assert(a.size() == n * n);
  return active().cholesky_log_det(a.data(), n);
}

void congruence(std::span<const double> s, std::span<const double> v,
                std::span<double> out, std::size_t n) {
  assert(s.size() == n * n && v.size() == n * n && out.size() == n * n);
  std::vector<double> scratch(n * n);
  active().congruence(s.data(), v.data(), out.data(), scratch.data(), n);
}

}  // namespace gqn::kernels
