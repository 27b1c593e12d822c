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

#include <immintrin.h>

#include "common.hpp"

namespace gqn::kernels::avx2 {

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k + 4),
                           _mm256_loadu_pd(b + k + 4), acc1);
  }
  for (; k + 4 <= n; k += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc0);
  }
  acc0 = _mm256_add_pd(acc0, acc1);
  const __m128d lo = _mm256_castpd256_pd128(acc0);
  const __m128d hi = _mm256_extractf128_pd(acc0, 1);
  __m128d sum2 = _mm_add_pd(lo, hi);
  sum2 = _mm_add_sd(sum2, _mm_unpackhi_pd(sum2, sum2));
  double acc = _mm_cvtsd_f64(sum2);
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

}  // namespace gqn::kernels::avx2
