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

#ifndef GENKB_EMBED_NEGATIVE_SAMPLER_H_
#define GENKB_EMBED_NEGATIVE_SAMPLER_H_

#include <cstdint>
#include <random>
#include <vector>

#include "genkb/kb/background.h"
#include "genkb/kb/knowledge_base.h"

namespace genkb {

struct NegativeSamplingConfig {
  std::size_t negatives = 1;
  // Fraction of corruptions drawn from entities sharing a type with the
  // replaced one.
  double same_type_fraction = 0.0;
  // Corrupt the target instead of the source with probability 0.5.
  bool corrupt_target = true;
  int max_attempts = 100;
};

// Corrupts one slot of a triple, rejecting candidates present in `known`.
// Entities without types draw same-type corruptions from the full
// vocabulary.
class NegativeSampler {
 public:
  NegativeSampler(const KnowledgeBase& known, const TypeMap& types,
                  NegativeSamplingConfig config);

  std::vector<Triple> Sample(const Triple& positive, std::mt19937_64& rng);

  // Negatives abandoned after `max_attempts` rejections.
  std::size_t exhausted() const { return exhausted_; }

 private:
  EntityId Draw(EntityId original, bool same_type, std::mt19937_64& rng) const;

  const KnowledgeBase& known_;
  NegativeSamplingConfig config_;
  // Per entity: indices into type_members_.
  std::vector<std::vector<std::size_t>> entity_types_;
  std::vector<std::vector<EntityId>> type_members_;
  std::size_t exhausted_ = 0;
};

}  // namespace genkb

#endif  // GENKB_EMBED_NEGATIVE_SAMPLER_H_
