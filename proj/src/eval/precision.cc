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

#include "genkb/eval/precision.h"

#include <string>
#include <vector>

#include "genkb/error.h"

namespace genkb {
namespace {

void CheckYield(const AnnotationOracle& oracle, std::size_t y) {
  if (y < 1 || y > oracle.size()) {
    throw ConfigError("yield " + std::to_string(y) + " outside 1.." +
                      std::to_string(oracle.size()));
  }
}

Rational Share(std::size_t hits, std::size_t n) {
  return Rational(static_cast<std::int64_t>(hits), static_cast<std::int64_t>(n));
}

}  // namespace

Rational PrecisionAtYield(AnnotationOracle& oracle, std::size_t y) {
  CheckYield(oracle, y);
  return Share(oracle.CountTrue(1, y), y);
}

Rational DeltaPrecision(AnnotationOracle& oracle, std::size_t y,
                        std::size_t delta) {
  if (delta < 1) throw ConfigError("delta must be >= 1");
  CheckYield(oracle, y);
  if (y < delta) return PrecisionAtYield(oracle, y);
  return Share(oracle.CountTrue(y - delta + 1, y), delta);
}

bool DecompositionCheck(AnnotationOracle& oracle, std::size_t y,
                        std::size_t delta) {
  if (delta < 1 || y % delta != 0) throw ConfigError("delta must divide y");
  CheckYield(oracle, y);
  const Rational whole = PrecisionAtYield(oracle, y);
  Rational sum = 0;
  for (std::size_t j = 1; j <= y / delta; ++j) {
    sum += DeltaPrecision(oracle, j * delta, delta);
  }
  return whole == sum * Share(delta, y);
}

MonotonicityOnset FindMonotonicityOnset(AnnotationOracle& oracle,
                                        std::size_t delta) {
  if (delta < 1) throw ConfigError("delta must be >= 1");
  const std::size_t windows = oracle.size() / delta;
  if (windows == 0) return {oracle.size(), false};
  std::vector<Rational> p;
  p.reserve(windows);
  for (std::size_t j = 1; j <= windows; ++j) {
    p.push_back(DeltaPrecision(oracle, j * delta, delta));
  }
  const Rational tolerance(1, static_cast<std::int64_t>(delta));
  std::size_t start = windows - 1;
  while (start > 0 && p[start] <= p[start - 1] + tolerance) --start;
  if (windows > 1 && start == windows - 1) return {oracle.size(), false};
  return {(start + 1) * delta, true};
}

double ToDouble(const Rational& r) { return boost::rational_cast<double>(r); }

}  // namespace genkb
