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

#include "genkb/embed/losses.h"

#include <algorithm>
#include <cmath>

#include "genkb/embed/model.h"
#include "genkb/error.h"

namespace genkb {
namespace {

void CheckSign(int y) {
  if (y != 1 && y != -1) throw Error("binary target must be +1 or -1");
}

void CheckClass(int y) {
  if (y < 1 || y > 3) throw Error("class index must be 1, 2 or 3");
}

}  // namespace

double Softplus(double x) {
  if (x > 30.0) return x + std::log1p(std::exp(-x));
  if (x < -30.0) return std::exp(x);
  return std::log1p(std::exp(x));
}

double BinaryLoss(double score, int y) {
  CheckSign(y);
  return Softplus(-y * score);
}

double BinaryLossGrad(double score, int y) {
  CheckSign(y);
  return -y * Sigmoid(-y * score);
}

double MulticlassLoss(const std::array<double, 3>& scores, int y) {
  CheckClass(y);
  const double m = *std::max_element(scores.begin(), scores.end());
  double z = 0.0;
  for (double s : scores) z += std::exp(s - m);
  return m + std::log(z) - scores[y - 1];
}

std::array<double, 3> MulticlassLossGrad(const std::array<double, 3>& scores,
                                         int y) {
  CheckClass(y);
  const double m = *std::max_element(scores.begin(), scores.end());
  std::array<double, 3> g{};
  double z = 0.0;
  for (int c = 0; c < 3; ++c) {
    g[c] = std::exp(scores[c] - m);
    z += g[c];
  }
  for (int c = 0; c < 3; ++c) g[c] /= z;
  g[y - 1] -= 1.0;
  return g;
}

HoleGradient HoleScoreGradient(ConstSpan r, ConstSpan s, ConstSpan t) {
  return HoleGradient{CircularCorrelation(s, t), CircularCorrelation(r, t),
                      CircularConvolution(r, s)};
}

}  // namespace genkb
