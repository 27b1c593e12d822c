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

// Independent reference computations for tests. Nothing here calls into the
// kernel layer or the routines it checks.

#include <cstdint>
#include <vector>

#include "gqn/core.hpp"

namespace gqn::oracle {

/// Determinant by cofactor expansion (n <= 8) or long-double LU.
long double determinant(const Matrix& m);

/// Symplectic eigenvalues via the antisymmetric matrix L^T Omega L, where
/// V = L L^T, solved as a symmetric eigenproblem on -(L^T Omega L)^2.
std::vector<double> williamson_spectrum(const Matrix& v);

/// Entries V[2a+s][2b+t] copied for kept modes a, b by explicit index loops.
Matrix partial_trace(const Matrix& v, const std::vector<std::size_t>& keep);

/// g(nu) in long double; 0 at nu = 1.
long double thermal_entropy(long double nu);

/// S V S^T by triple loop.
Matrix congruence(const Matrix& s, const Matrix& v);

/// Haar-free random symplectic: products of random single-mode squeezers,
/// phase rotations and two-mode beam splitters.
Matrix random_symplectic_product(std::size_t modes, double scale,
                                 std::uint64_t seed);

/// Random mixed state: symplectic image of a random thermal diagonal.
Matrix random_state(std::size_t modes, double scale, double max_thermal,
                    std::uint64_t seed);

/// Random symmetric positive-definite matrix with eigenvalues in [lo, hi].
Matrix random_spd(std::size_t n, double lo, double hi, std::uint64_t seed);

}  // namespace gqn::oracle
