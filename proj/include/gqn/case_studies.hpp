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

// Built-in reproduction of the analytic case studies: the 6-mode and
// 4-mode fully symmetric examples and the product inequality behind the M
// monogamy bound.

#include <iosfwd>
#include <string>
#include <vector>

namespace gqn {

struct VerifyCheck {
  std::string id;
  std::string description;
  bool gating = true;
  bool passed = false;
  std::string detail;
};

/// One row of the 4-mode residual table. Only the cut of the middle party is
/// tabulated; every one-vs-rest cut enters the consistency check.
struct FourModeRow {
  double b = 0.0;
  std::string partition;  // e.g. "1,2,1"
  std::string cut;        // e.g. "A2|A1A3"
  std::size_t cut_modes = 0;
  double residual = 0.0;       // vacuum variance 1
  double residual_half = 0.0;  // vacuum variance 1/2
  double closed_form = 0.0;
};

/// 225t^4 - 612t^3 + 576t^2 - 216t + 27.
double sextic_criterion_polynomial(double t);

/// (v_{+(2)}^2 / 9)(2b^8 - 10b^6 + 17b^4 - 9) with pure 4-mode parameters.
double four_mode_closed_form(double b);

/// M_{B|AC} - M_{B|A} - M_{B|C} for the pure 4-mode symmetric state split
/// into consecutive parties of the given sizes (A, B, C), with the matrix
/// scaled by `scale` before evaluating determinants.
double four_mode_residual(double b, const std::vector<std::size_t>& sizes,
                          double scale = 1.0);

std::vector<FourModeRow> four_mode_table(const std::vector<double>& bs);

struct CaseStudyReport {
  std::vector<VerifyCheck> checks;
  std::vector<FourModeRow> four_mode;
  // max deviation between permutation-equivalent cuts, over the b grid
  double four_mode_max_mismatch = 0.0;
  bool all_passed() const;
};

CaseStudyReport run_case_studies();
void print_case_studies(const CaseStudyReport& report, std::ostream& out);

}  // namespace gqn
