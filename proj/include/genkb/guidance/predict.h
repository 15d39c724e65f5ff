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

#ifndef GENKB_GUIDANCE_PREDICT_H_
#define GENKB_GUIDANCE_PREDICT_H_

#include <optional>
#include <string>
#include <vector>

#include "genkb/embed/model.h"
#include "genkb/kb/background.h"
#include "genkb/kb/knowledge_base.h"

namespace genkb {

struct PredictOptions {
  // Restrict to triples with this entity in either slot.
  std::optional<std::string> entity;
  bool schema_filter = true;
  // 0 keeps everything.
  std::size_t top_k = 0;
};

struct Predictions {
  // Score-descending; ties in lexicographic name order.
  std::vector<ScoredTriple> ranked;
  std::size_t schema_removed = 0;
};

// Scores every (s, r, t) over the model's vocabularies with s != t that is
// absent from `known` (compared by name).
Predictions PredictNewTriples(const EmbeddingModel& model,
                              const KnowledgeBase& known,
                              const Background& background,
                              const PredictOptions& options = {});

NamedTriple NamesOf(const EmbeddingModel& model, const Triple& triple);

// Sorts by score descending, ties broken by lexicographic name order.
void SortRanked(const EmbeddingModel& model, std::vector<ScoredTriple>& items);

}  // namespace genkb

#endif  // GENKB_GUIDANCE_PREDICT_H_
