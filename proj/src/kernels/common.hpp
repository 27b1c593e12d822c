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

#include <cmath>
#include <cstddef>

#include "gqn/kernels.hpp"

namespace gqn::kernels::detail {

// Shared loop skeletons. Each ISA instantiates them with its own dot product
// so the surrounding control flow is identical across variants.

template <double (*Dot)(const double*, const double*, std::size_t)>
void congruence_with(const double* s, const double* v, double* out,
                     double* scratch, std::size_t n) {
  // scratch = S V; V symmetric so column j of V is row j.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      scratch[i * n + j] = Dot(s + i * n, v + j * n, n);
    }
  }
  // out = scratch S^T, filled symmetrically from the upper triangle.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double x = Dot(scratch + i * n, s + j * n, n);
      out[i * n + j] = x;
      out[j * n + i] = x;
    }
  }
}

template <double (*Dot)(const double*, const double*, std::size_t)>
CholeskyResult cholesky_with(double* a, std::size_t n) {
  CholeskyResult result;
  double log_det = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double* row_j = a + j * n;
    const double pivot = row_j[j] - Dot(row_j, row_j, j);
    if (!(pivot > 0.0) || !std::isfinite(pivot)) {
      result.failed_pivot = j;
      return result;
    }
    const double diag = std::sqrt(pivot);
    row_j[j] = diag;
    log_det += std::log(pivot);
    const double inv = 1.0 / diag;
    for (std::size_t i = j + 1; i < n; ++i) {
      double* row_i = a + i * n;
      row_i[j] = (row_i[j] - Dot(row_i, row_j, j)) * inv;
    }
  }
  result.ok = true;
  result.log_det = log_det;
  return result;
}

}  // namespace gqn::kernels::detail
