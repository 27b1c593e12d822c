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

#include <arm_neon.h>

#include "common.hpp"

namespace gqn::kernels::neon {

double dot(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + k), vld1q_f64(b + k));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + k + 2), vld1q_f64(b + k + 2));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; k < n; ++k) acc += a[k] * b[k];
  return acc;
}

void congruence(const double* s, const double* v, double* out, double* scratch,
                std::size_t n) {
  detail::congruence_with<&dot>(s, v, out, scratch, n);
}

CholeskyResult cholesky_log_det(double* a, std::size_t n) {
  return detail::cholesky_with<&dot>(a, n);
}

}  // namespace gqn::kernels::neon
