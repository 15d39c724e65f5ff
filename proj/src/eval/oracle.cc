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

#include "genkb/eval/oracle.h"

#include <algorithm>
#include <memory>
#include <string>
#include <utility>

#include "genkb/error.h"

namespace genkb {

RankedPredictions::RankedPredictions(std::vector<RankedEntry> entries)
    : entries_(std::move(entries)) {
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const RankedEntry& a, const RankedEntry& b) {
                     if (a.score != b.score) return a.score > b.score;
                     return a.triple < b.triple;
                   });
}

const RankedEntry& RankedPredictions::at(std::size_t rank) const {
  if (rank < 1 || rank > entries_.size()) {
    throw ConfigError("rank " + std::to_string(rank) + " outside 1.." +
                      std::to_string(entries_.size()));
  }
  return entries_[rank - 1];
}

AnnotationOracle::AnnotationOracle(std::size_t size, BatchSource source)
    : source_(std::move(source)), cache_(size, -1) {}

AnnotationOracle AnnotationOracle::FromLabels(std::vector<bool> labels) {
  auto shared = std::make_shared<const std::vector<bool>>(std::move(labels));
  return AnnotationOracle(
      shared->size(), [shared](const std::vector<std::size_t>& positions) {
        std::vector<bool> out;
        out.reserve(positions.size());
        for (auto p : positions) out.push_back((*shared)[p - 1]);
        return out;
      });
}

AnnotationOracle AnnotationOracle::FromTruth(const RankedPredictions& ranked,
                                             std::set<NamedTriple> true_triples) {
  std::vector<bool> labels;
  labels.reserve(ranked.size());
  for (const auto& e : ranked.entries()) {
    labels.push_back(true_triples.count(e.triple) > 0);
  }
  return FromLabels(std::move(labels));
}

void AnnotationOracle::CheckRange(std::size_t first, std::size_t last) const {
  if (first < 1 || last > cache_.size() || first > last) {
    throw ConfigError("positions " + std::to_string(first) + ".." +
                      std::to_string(last) + " outside 1.." +
                      std::to_string(cache_.size()));
  }
}

void AnnotationOracle::Resolve(std::size_t first, std::size_t last) {
  CheckRange(first, last);
  std::vector<std::size_t> missing;
  for (std::size_t p = first; p <= last; ++p) {
    if (cache_[p - 1] < 0) missing.push_back(p);
  }
  if (missing.empty()) return;
  const auto values = source_(missing);
  if (values.size() != missing.size()) {
    throw Error("annotation source returned " + std::to_string(values.size()) +
                " values for " + std::to_string(missing.size()) + " queries");
  }
  for (std::size_t i = 0; i < missing.size(); ++i) {
    cache_[missing[i] - 1] = values[i] ? 1 : 0;
  }
  queries_ += missing.size();
}

bool AnnotationOracle::Value(std::size_t position) {
  Resolve(position, position);
  return cache_[position - 1] == 1;
}

std::size_t AnnotationOracle::CountTrue(std::size_t first, std::size_t last) {
  Resolve(first, last);
  return static_cast<std::size_t>(
      std::count(cache_.begin() + (first - 1), cache_.begin() + last, 1));
}

}  // namespace genkb
