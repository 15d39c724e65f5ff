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

#include "genkb/eval/streams.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "genkb/error.h"

namespace genkb {

std::vector<bool> DecayingStream(std::size_t length, double c,
                                 std::uint64_t seed) {
  if (!(c > 0.0)) throw ConfigError("decay constant must be > 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<bool> out(length);
  for (std::size_t i = 1; i <= length; ++i) {
    out[i - 1] = u(rng) < std::min(1.0, c / (static_cast<double>(i) + c));
  }
  return out;
}

std::vector<bool> MonotoneDecayingStream(std::size_t length, double c,
                                         std::size_t block, std::uint64_t seed) {
  if (!(c > 0.0)) throw ConfigError("decay constant must be > 0");
  if (block < 1) throw ConfigError("block must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> counts;
  for (std::size_t start = 0; start < length; start += block) {
    const std::size_t size = std::min(block, length - start);
    const double mid = static_cast<double>(start) + 0.5 * static_cast<double>(size);
    std::binomial_distribution<std::size_t> draw(size,
                                                 std::min(1.0, c / (mid + c)));
    counts.push_back(draw(rng));
  }
  std::sort(counts.rbegin(), counts.rend());
  std::vector<bool> out(length, false);
  for (std::size_t b = 0; b < counts.size(); ++b) {
    const std::size_t start = b * block;
    const std::size_t n = std::min(counts[b], length - start);
    std::fill(out.begin() + start, out.begin() + start + n, true);
  }
  return out;
}

std::vector<bool> BernoulliStream(std::size_t length, double density,
                                  std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw ConfigError("density must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<bool> out(length);
  for (std::size_t i = 0; i < length; ++i) out[i] = u(rng) < density;
  return out;
}

std::vector<bool> DitheredStream(
    std::size_t length, const std::function<double(std::size_t)>& density) {
  std::vector<bool> out(length);
  double sum = 0.0;
  double floor_prev = 0.0;
  for (std::size_t i = 1; i <= length; ++i) {
    sum += std::clamp(density(i), 0.0, 1.0);
    const double f = std::floor(sum + 1e-9);
    out[i - 1] = f > floor_prev;
    floor_prev = f;
  }
  return out;
}

std::vector<bool> DitheredDecayingStream(std::size_t length, double c) {
  if (!(c > 0.0)) throw ConfigError("decay constant must be > 0");
  return DitheredStream(length, [c](std::size_t i) {
    return std::min(1.0, c / (static_cast<double>(i) + c));
  });
}

std::vector<bool> IncreasingStream(std::size_t length) {
  const double m = static_cast<double>(length);
  return DitheredStream(length, [m](std::size_t i) {
    const double x = static_cast<double>(i) / m;
    return x * x;
  });
}

}  // namespace genkb
