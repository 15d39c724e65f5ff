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

#ifndef GENKB_GUIDANCE_EXPAND_TRAIN_H_
#define GENKB_GUIDANCE_EXPAND_TRAIN_H_

#include <vector>

#include "genkb/embed/trainer.h"
#include "genkb/guidance/taxonomy_rules.h"
#include "genkb/kb/background.h"

namespace genkb {

struct ExpandConfig {
  RuleSet rules = RuleSet::All();
  double derived_weight = 0.5;
  double keep_threshold = 0.5;

  bool operator==(const ExpandConfig&) const = default;
};

struct ExpandTrainResult {
  TrainResult train;
  // K plus the derived triples; the model's vocabularies are this KB's.
  KnowledgeBase combined;
  std::vector<DerivedTriple> derived;
  // Post-training scores, aligned with `derived`.
  std::vector<ScoredTriple> revisited;

  // Derived triples whose revisited probability reaches `threshold`.
  std::vector<DerivedTriple> Kept(double threshold) const;
};

// Expands `kb` with the taxonomy rules, trains on the union with derived
// triples down-weighted, then re-scores every derived triple.
ExpandTrainResult ExpandThenTrain(const KnowledgeBase& kb,
                                  const Background& background,
                                  const TrainConfig& train_config,
                                  const ExpandConfig& expand_config = {});

}  // namespace genkb

#endif  // GENKB_GUIDANCE_EXPAND_TRAIN_H_
