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

#ifndef GENKB_EVAL_PRECISION_H_
#define GENKB_EVAL_PRECISION_H_

#include <cstddef>
#include <cstdint>

#include <boost/rational.hpp>

#include "genkb/eval/oracle.h"

namespace genkb {

using Rational = boost::rational<std::int64_t>;

// prc(y): share of true entries among the top y. Requires 1 <= y <= m.
Rational PrecisionAtYield(AnnotationOracle& oracle, std::size_t y);

// prc(y, delta): share of true entries among ranks y-delta+1..y, or prc(y)
// when y < delta.
Rational DeltaPrecision(AnnotationOracle& oracle, std::size_t y,
                        std::size_t delta);

// Checks prc(y) == (delta / y) * sum_{j=1..y/delta} prc(j*delta, delta)
// exactly. Throws ConfigError unless delta divides y.
bool DecompositionCheck(AnnotationOracle& oracle, std::size_t y,
                        std::size_t delta);

struct MonotonicityOnset {
  std::size_t ytilde = 0;
  bool monotone = false;
};

// Scans prc(j*delta, delta) for j = 1..m/delta and returns the smallest
// checkpoint j*delta from which the sequence never rises by more than
// 1/delta per step. Streams whose non-increasing suffix is a single window
// are flagged non-monotone with ytilde = m.
MonotonicityOnset FindMonotonicityOnset(AnnotationOracle& oracle,
                                        std::size_t delta);

double ToDouble(const Rational& r);

}  // namespace genkb

#endif  // GENKB_EVAL_PRECISION_H_
