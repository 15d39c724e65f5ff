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

#ifndef GENKB_EVAL_ORACLE_H_
#define GENKB_EVAL_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "genkb/kb/knowledge_base.h"

namespace genkb {

struct RankedEntry {
  NamedTriple triple;
  double score = 0.0;
};

// Predictions ordered by non-increasing score, ties by triple order.
class RankedPredictions {
 public:
  RankedPredictions() = default;
  explicit RankedPredictions(std::vector<RankedEntry> entries);

  std::size_t size() const { return entries_.size(); }
  // 1-based rank.
  const RankedEntry& at(std::size_t rank) const;
  const std::vector<RankedEntry>& entries() const { return entries_; }

 private:
  std::vector<RankedEntry> entries_;
};

// Resolves the true value v(t_i) of ranked positions i in 1..m. Each
// distinct position is charged once; later lookups hit the cache.
class AnnotationOracle {
 public:
  // Receives uncached positions in increasing rank order and returns one
  // value per position.
  using BatchSource =
      std::function<std::vector<bool>(const std::vector<std::size_t>&)>;

  AnnotationOracle(std::size_t size, BatchSource source);

  static AnnotationOracle FromLabels(std::vector<bool> labels);
  static AnnotationOracle FromTruth(const RankedPredictions& ranked,
                                    std::set<NamedTriple> true_triples);

  std::size_t size() const { return cache_.size(); }
  std::size_t queries() const { return queries_; }

  bool Value(std::size_t position);
  // Resolves every position in [first, last] with one batch call.
  void Resolve(std::size_t first, std::size_t last);
  // Number of true positions in [first, last].
  std::size_t CountTrue(std::size_t first, std::size_t last);

 private:
  void CheckRange(std::size_t first, std::size_t last) const;

  BatchSource source_;
  std::vector<std::int8_t> cache_;  // -1 unknown, else 0 or 1
  std::size_t queries_ = 0;
};

}  // namespace genkb

#endif  // GENKB_EVAL_ORACLE_H_
