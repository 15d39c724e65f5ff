// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GENKB_EVAL_BOUNDS_H_
#define GENKB_EVAL_BOUNDS_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "genkb/eval/oracle.h"
#include "genkb/eval/precision.h"

namespace genkb {

struct EstimatorParams {
  double alpha = 2.0;
  std::size_t delta = 64;
  std::size_t ytilde = 256;  // yield from which prc(y, delta) is non-increasing

  // alpha > 1 and finite, delta >= 1, ytilde >= delta.
  void Validate() const;
  // ceil(log_alpha ytilde).
  int ell() const;
  bool operator==(const EstimatorParams&) const = default;
};

// Checkpoint yields y_0..y_{count-1}: y_0 = 1 and
// y_j = max(round(alpha^j), y_{j-1} + 1).
std::vector<std::size_t> CheckpointYields(double alpha, int count);
// Largest k with y_k <= m, or -1 when m == 0.
int LastCheckpoint(double alpha, std::size_t m);

struct BoundsRow {
  int k = 0;
  int ell = 0;
  std::size_t yield = 0;  // y_k
  Rational lower;         // L
  Rational upper;         // U
  Rational lower_hat;     // (delta / y_k) * L
  Rational upper_hat;     // (delta / y_k) * U
  std::optional<Rational> exact;  // prc(y_k)
  std::size_t queries = 0;        // oracle queries so far
  // delta divides y_ell and every gap y_{j+1} - y_j, j = ell..k-1.
  bool divisible = false;
};

//   L = floor(y_l / D) prc(y_l) + sum_{j=l..k-1} floor(g_j / D) prc(y_{j+1}, D)
//   U =  ceil(y_l / D) prc(y_l) + sum_{j=l..k-1}  ceil(g_j / D) prc(y_j, D)
// with g_j = y_{j+1} - y_j. Requires ell <= k and y_k <= m.
BoundsRow EstimateBounds(AnnotationOracle& oracle, const EstimatorParams& params,
                         int k);

// Rows for k = ell..last. When `exact_oracle` is given, each row also
// carries prc(y_k) resolved through it, leaving `oracle`'s count untouched.
std::vector<BoundsRow> BoundsTable(AnnotationOracle& oracle,
                                   const EstimatorParams& params, int last,
                                   AnnotationOracle* exact_oracle = nullptr);

// Query ceiling for row k: y_ell + delta * (k - ell + 1).
std::size_t QueryBudget(const EstimatorParams& params, int k);

struct RatioVerdict {
  bool determinate = false;  // false when L == 0
  bool holds = false;
  bool exact = false;  // slack 0 under divisibility
  double slack = 0.0;  // absolute: alpha * (k - ell + 1), or 0
};

// alpha * L + slack >= U.
RatioVerdict CheckRatio(const BoundsRow& row, const EstimatorParams& params);

struct ApproximationVerdict {
  std::size_t yield = 0;
  int k_minus = 0;  // largest k with y_k <= y
  int k_plus = 0;   // smallest k with y_k >= y
  Rational lower_hat;  // L-hat at k_plus
  Rational upper_hat;  // U-hat at k_minus
  Rational exact;      // prc(y)
  bool lower_holds = false;  // L-hat(k+) - s <= alpha^2 prc(y)
  bool upper_holds = false;  // U-hat(k-) + s >= prc(y) / alpha^2
};

// Slack s is delta * (k - ell + 1) / y_k for the row in question, or 0
// under divisibility. Requires y >= y_ell and y_{k+} <= m.
ApproximationVerdict CheckApproximation(AnnotationOracle& oracle,
                                        const EstimatorParams& params,
                                        std::size_t y,
                                        AnnotationOracle* exact_oracle = nullptr);

}  // namespace genkb

#endif  // GENKB_EVAL_BOUNDS_H_
