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

#include "genkb/embed/negative_sampler.h"

#include <map>

namespace genkb {

NegativeSampler::NegativeSampler(const KnowledgeBase& known,
                                 const TypeMap& types,
                                 NegativeSamplingConfig config)
    : known_(known), config_(config) {
  if (config_.negatives < 1) throw ConfigError("negatives must be >= 1");
  if (!(config_.same_type_fraction >= 0.0 &&
        config_.same_type_fraction <= 1.0)) {
    throw ConfigError("same-type fraction must lie in [0, 1]");
  }
  const auto& names = known.entities().names();
  entity_types_.resize(names.size());
  std::map<std::string, std::size_t> type_index;
  for (std::size_t e = 0; e < names.size(); ++e) {
    for (const auto& type : types.Types(names[e])) {
      auto [it, inserted] = type_index.emplace(type, type_members_.size());
      if (inserted) type_members_.emplace_back();
      type_members_[it->second].push_back(EntityId(static_cast<int>(e)));
      entity_types_[e].push_back(it->second);
    }
  }
}

EntityId NegativeSampler::Draw(EntityId original, bool same_type,
                               std::mt19937_64& rng) const {
  const auto& own = entity_types_[original.index()];
  if (same_type && !own.empty()) {
    std::uniform_int_distribution<std::size_t> pick_type(0, own.size() - 1);
    const auto& members = type_members_[own[pick_type(rng)]];
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    return members[pick(rng)];
  }
  std::uniform_int_distribution<int> pick(
      0, static_cast<int>(known_.entities().size()) - 1);
  return EntityId(pick(rng));
}

std::vector<Triple> NegativeSampler::Sample(const Triple& positive,
                                            std::mt19937_64& rng) {
  std::vector<Triple> out;
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution same(config_.same_type_fraction);
  for (std::size_t n = 0; n < config_.negatives; ++n) {
    const bool target_slot = config_.corrupt_target && coin(rng);
    const bool same_type = same(rng);
    const EntityId original = target_slot ? positive.target : positive.source;
    bool found = false;
    for (int attempt = 0; attempt < config_.max_attempts; ++attempt) {
      Triple candidate = positive;
      (target_slot ? candidate.target : candidate.source) =
          Draw(original, same_type, rng);
      if (!known_.Contains(candidate)) {
        out.push_back(candidate);
        found = true;
        break;
      }
    }
    if (!found) ++exhausted_;
  }
  return out;
}

}  // namespace genkb
