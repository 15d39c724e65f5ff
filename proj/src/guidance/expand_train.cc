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

#include "genkb/guidance/expand_train.h"

namespace genkb {

std::vector<DerivedTriple> ExpandTrainResult::Kept(double threshold) const {
  std::vector<DerivedTriple> out;
  for (std::size_t i = 0; i < derived.size(); ++i) {
    if (revisited[i].probability >= threshold) out.push_back(derived[i]);
  }
  return out;
}

ExpandTrainResult ExpandThenTrain(const KnowledgeBase& kb,
                                  const Background& background,
                                  const TrainConfig& train_config,
                                  const ExpandConfig& expand_config) {
  if (!(expand_config.derived_weight >= 0.0)) {
    throw ConfigError("derived weight must be >= 0");
  }
  ExpandTrainResult result;
  result.derived = ExpandTaxonomy(kb, background.taxonomy, expand_config.rules);
  result.combined = kb;

  std::vector<WeightedTriple> examples;
  examples.reserve(kb.size() + result.derived.size());
  for (const auto& [triple, label] : kb.triples()) {
    examples.push_back({triple, label, 1.0});
  }
  std::vector<Triple> derived_ids;
  for (const auto& d : result.derived) {
    result.combined.Add(d.triple, d.label);
    const Triple id = *result.combined.Resolve(d.triple);
    derived_ids.push_back(id);
    examples.push_back({id, d.label, expand_config.derived_weight});
  }

  result.train = TrainWeighted(result.combined, examples, background.types,
                               train_config);
  for (const Triple& id : derived_ids) {
    result.revisited.push_back(HoleScore(result.train.model, id));
  }
  return result;
}

}  // namespace genkb
