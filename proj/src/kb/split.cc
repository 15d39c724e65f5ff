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

#include "genkb/kb/split.h"

#include <algorithm>
#include <random>
#include <vector>

namespace genkb {

SplitSizes ComputeSplitSizes(std::size_t n) {
  SplitSizes sizes;
  sizes.test = n / 5;
  sizes.validation = (2 * n + 5) / 10;
  sizes.train = n - sizes.test - sizes.validation;
  return sizes;
}

DatasetSplit SplitKb(const KnowledgeBase& kb, std::uint64_t seed) {
  if (kb.size() < 5) {
    throw ConfigError("split needs at least 5 triples, got " +
                      std::to_string(kb.size()));
  }
  // Name order, not id order, so the split does not depend on the order in
  // which the file introduced entities.
  std::vector<std::pair<NamedTriple, std::pair<Triple, QuantLabel>>> items;
  items.reserve(kb.size());
  for (const auto& [triple, label] : kb.triples()) {
    items.push_back({kb.Names(triple), {triple, label}});
  }
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::mt19937_64 rng(seed);
  std::shuffle(items.begin(), items.end(), rng);

  const SplitSizes sizes = ComputeSplitSizes(items.size());
  DatasetSplit split{kb.EmptyCopy(), kb.EmptyCopy(), kb.EmptyCopy(), seed};
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& [triple, label] = items[i].second;
    if (i < sizes.train) {
      split.train.Add(triple, label);
    } else if (i < sizes.train + sizes.validation) {
      split.validation.Add(triple, label);
    } else {
      split.test.Add(triple, label);
    }
  }
  return split;
}

}  // namespace genkb
