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

#include "genkb/eval/bounds.h"

#include <cmath>
#include <string>

#include "genkb/error.h"

namespace genkb {
namespace {

constexpr double kMaxYield = 1e15;

Rational Count(std::size_t n) { return Rational(static_cast<std::int64_t>(n)); }

// Exact value of a double whose binary expansion is short, as is the case
// for alpha = 1.5 or 2.
std::optional<Rational> Dyadic(double a) {
  double scale = 1.0;
  for (int s = 0; s <= 20; ++s, scale *= 2.0) {
    const double v = a * scale;
    if (v == std::floor(v) && std::abs(v) < 1e12) {
      return Rational(static_cast<std::int64_t>(v),
                      static_cast<std::int64_t>(scale));
    }
  }
  return std::nullopt;
}

// factor * x + add >= y, exactly when `factor` is dyadic.
bool ScaledAtLeast(double factor, const Rational& x, const Rational& add,
                   const Rational& y) {
  if (auto q = Dyadic(factor)) return *q * x + add >= y;
  const auto cast = [](const Rational& r) {
    return static_cast<long double>(r.numerator()) /
           static_cast<long double>(r.denominator());
  };
  return static_cast<long double>(factor) * cast(x) + cast(add) >= cast(y);
}

std::size_t FloorDiv(std::size_t a, std::size_t b) { return a / b; }
std::size_t CeilDiv(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

void EstimatorParams::Validate() const {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    throw ConfigError("alpha must be a finite number > 1");
  }
  if (delta < 1) throw ConfigError("delta must be >= 1");
  if (ytilde < delta) throw ConfigError("ytilde must be >= delta");
}

int EstimatorParams::ell() const {
  Validate();
  int j = 0;
  const double target = static_cast<double>(ytilde) * (1.0 - 1e-12);
  while (std::pow(alpha, j) < target) ++j;
  return j;
}

std::vector<std::size_t> CheckpointYields(double alpha, int count) {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    throw ConfigError("alpha must be a finite number > 1");
  }
  std::vector<std::size_t> yields;
  for (int j = 0; j < count; ++j) {
    const double power = std::pow(alpha, j);
    if (power > kMaxYield) throw ConfigError("checkpoint yield overflow");
    std::size_t y = static_cast<std::size_t>(std::llround(power));
    if (j == 0) y = 1;
    if (!yields.empty() && y <= yields.back()) y = yields.back() + 1;
    yields.push_back(y);
  }
  return yields;
}

int LastCheckpoint(double alpha, std::size_t m) {
  int k = -1;
  for (int count = 1;; ++count) {
    const auto yields = CheckpointYields(alpha, count);
    if (yields.back() > m) return k;
    k = count - 1;
  }
}

std::size_t QueryBudget(const EstimatorParams& params, int k) {
  const int ell = params.ell();
  const auto yields = CheckpointYields(params.alpha, ell + 1);
  return yields[ell] + params.delta * static_cast<std::size_t>(k - ell + 1);
}

BoundsRow EstimateBounds(AnnotationOracle& oracle, const EstimatorParams& params,
                         int k) {
  const int ell = params.ell();
  if (k < ell) {
    throw ConfigError("checkpoint " + std::to_string(k) + " below ell = " +
                      std::to_string(ell));
  }
  const auto y = CheckpointYields(params.alpha, k + 1);
  if (y[k] > oracle.size()) {
    throw ConfigError("checkpoint yield " + std::to_string(y[k]) +
                      " exceeds the " + std::to_string(oracle.size()) +
                      " ranked predictions");
  }
  const std::size_t d = params.delta;
  BoundsRow row;
  row.k = k;
  row.ell = ell;
  row.yield = y[k];
  row.divisible = y[ell] % d == 0;
  const Rational head = PrecisionAtYield(oracle, y[ell]);
  row.lower = Count(FloorDiv(y[ell], d)) * head;
  row.upper = Count(CeilDiv(y[ell], d)) * head;
  for (int j = ell; j < k; ++j) {
    const std::size_t gap = y[j + 1] - y[j];
    row.divisible = row.divisible && gap % d == 0;
    row.lower += Count(FloorDiv(gap, d)) * DeltaPrecision(oracle, y[j + 1], d);
    row.upper += Count(CeilDiv(gap, d)) * DeltaPrecision(oracle, y[j], d);
  }
  const Rational scale(static_cast<std::int64_t>(d),
                       static_cast<std::int64_t>(y[k]));
  row.lower_hat = scale * row.lower;
  row.upper_hat = scale * row.upper;
  row.queries = oracle.queries();
  return row;
}

std::vector<BoundsRow> BoundsTable(AnnotationOracle& oracle,
                                   const EstimatorParams& params, int last,
                                   AnnotationOracle* exact_oracle) {
  std::vector<BoundsRow> rows;
  for (int k = params.ell(); k <= last; ++k) {
    rows.push_back(EstimateBounds(oracle, params, k));
    if (exact_oracle != nullptr) {
      rows.back().exact = PrecisionAtYield(*exact_oracle, rows.back().yield);
    }
  }
  return rows;
}

RatioVerdict CheckRatio(const BoundsRow& row, const EstimatorParams& params) {
  RatioVerdict v;
  if (row.lower.numerator() == 0) return v;
  v.determinate = true;
  v.exact = row.divisible;
  const int terms = row.k - row.ell + 1;
  v.slack = v.exact ? 0.0 : params.alpha * terms;
  const Rational slack_terms = v.exact ? Rational(0) : Rational(terms);
  // alpha * L + alpha * terms >= U, i.e. alpha * (L + terms) >= U.
  v.holds = ScaledAtLeast(params.alpha, row.lower + slack_terms, 0, row.upper);
  return v;
}

ApproximationVerdict CheckApproximation(AnnotationOracle& oracle,
                                        const EstimatorParams& params,
                                        std::size_t y,
                                        AnnotationOracle* exact_oracle) {
  const int ell = params.ell();
  const int last = LastCheckpoint(params.alpha, oracle.size());
  if (last < ell) throw ConfigError("no checkpoint at or above ell fits");
  const auto yields = CheckpointYields(params.alpha, last + 1);
  if (y < yields[ell]) {
    throw ConfigError("yield " + std::to_string(y) + " below y_ell = " +
                      std::to_string(yields[ell]));
  }
  ApproximationVerdict v;
  v.yield = y;
  v.k_minus = -1;
  v.k_plus = -1;
  for (int j = ell; j <= last; ++j) {
    if (yields[j] <= y) v.k_minus = j;
    if (yields[j] >= y && v.k_plus < 0) v.k_plus = j;
  }
  if (v.k_plus < 0) {
    throw ConfigError("yield " + std::to_string(y) +
                      " has no checkpoint above it within the ranking");
  }
  const BoundsRow lo = EstimateBounds(oracle, params, v.k_plus);
  const BoundsRow hi = EstimateBounds(oracle, params, v.k_minus);
  v.lower_hat = lo.lower_hat;
  v.upper_hat = hi.upper_hat;
  v.exact = PrecisionAtYield(exact_oracle ? *exact_oracle : oracle, y);
  const auto slack = [&](const BoundsRow& row) {
    if (row.divisible) return Rational(0);
    return Rational(static_cast<std::int64_t>(params.delta) * (row.k - ell + 1),
                    static_cast<std::int64_t>(row.yield));
  };
  const double a2 = params.alpha * params.alpha;
  v.lower_holds = ScaledAtLeast(a2, v.exact, slack(lo), v.lower_hat);
  // U-hat + s >= prc / alpha^2  <=>  alpha^2 (U-hat + s) >= prc.
  v.upper_holds = ScaledAtLeast(a2, v.upper_hat + slack(hi), 0, v.exact);
  return v;
}

}  // namespace genkb
