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

#ifndef GENKB_EVAL_STREAMS_H_
#define GENKB_EVAL_STREAMS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace genkb {

// Synthetic label streams v(t_1..t_m) for exercising the estimators.

// v(t_i) ~ Bernoulli(min(1, c / (i + c))), i = 1..length.
std::vector<bool> DecayingStream(std::size_t length, double c,
                                 std::uint64_t seed);

// Decaying density whose prc(y, delta) is non-increasing for every y >= delta
// and every delta that is a multiple of `block`: block b draws its count
// from Binomial(block, min(1, c / (i_b + c))) at its midpoint i_b, counts are
// sorted non-increasing, and each block's true labels come first.
std::vector<bool> MonotoneDecayingStream(std::size_t length, double c,
                                         std::size_t block, std::uint64_t seed);

// v(t_i) ~ Bernoulli(density).
std::vector<bool> BernoulliStream(std::size_t length, double density,
                                  std::uint64_t seed);

// Deterministic: v(t_i) = floor(S_i) - floor(S_{i-1}) with S_i the running
// sum of density(i), so every window holds its expected count to within one.
std::vector<bool> DitheredStream(std::size_t length,
                                 const std::function<double(std::size_t)>& density);

// Dithered c / (i + c).
std::vector<bool> DitheredDecayingStream(std::size_t length, double c);
// Dithered (i / length)^2.
std::vector<bool> IncreasingStream(std::size_t length);

}  // namespace genkb

#endif  // GENKB_EVAL_STREAMS_H_
