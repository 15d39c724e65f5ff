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

#ifndef GENKB_EMBED_LOSSES_H_
#define GENKB_EMBED_LOSSES_H_

#include <array>

#include "genkb/embed/correlation.h"

namespace genkb {

// log(1 + exp(x)) without overflow.
double Softplus(double x);

// log(1 + exp(-y * score)) for y in {-1, +1}.
double BinaryLoss(double score, int y);
// d BinaryLoss / d score.
double BinaryLossGrad(double score, int y);

// Negative log softmax probability of class `y` in {1, 2, 3}.
double MulticlassLoss(const std::array<double, 3>& scores, int y);
// d MulticlassLoss / d scores: softmax - onehot(y).
std::array<double, 3> MulticlassLossGrad(const std::array<double, 3>& scores,
                                         int y);

// Partial derivatives of f = r . (s o t).
struct HoleGradient {
  Vec r;  // s o t
  Vec s;  // r o t
  Vec t;  // r * s (circular convolution)
};
HoleGradient HoleScoreGradient(ConstSpan r, ConstSpan s, ConstSpan t);

}  // namespace genkb

#endif  // GENKB_EMBED_LOSSES_H_
