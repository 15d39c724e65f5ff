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

#include "genkb/guidance/predict.h"

#include <algorithm>

#include "genkb/guidance/schema_check.h"

namespace genkb {

NamedTriple NamesOf(const EmbeddingModel& model, const Triple& triple) {
  return {model.entities().Name(triple.source.value),
          model.relations().Name(triple.relation.value),
          model.entities().Name(triple.target.value)};
}

void SortRanked(const EmbeddingModel& model, std::vector<ScoredTriple>& items) {
  std::sort(items.begin(), items.end(),
            [&](const ScoredTriple& a, const ScoredTriple& b) {
              if (a.score != b.score) return a.score > b.score;
              return NamesOf(model, a.triple) < NamesOf(model, b.triple);
            });
}

Predictions PredictNewTriples(const EmbeddingModel& model,
                              const KnowledgeBase& known,
                              const Background& background,
                              const PredictOptions& options) {
  const int n_entities = static_cast<int>(model.entities().size());
  const int n_relations = static_cast<int>(model.relations().size());
  std::optional<int> focus;
  if (options.entity) {
    focus = model.entities().Find(*options.entity);
    if (!focus) throw NotFoundError("unknown entity '" + *options.entity + "'");
  }

  Predictions out;
  for (int s = 0; s < n_entities; ++s) {
    for (int t = 0; t < n_entities; ++t) {
      if (s == t) continue;
      if (focus && s != *focus && t != *focus) continue;
      for (int r = 0; r < n_relations; ++r) {
        const Triple triple{EntityId(s), RelationId(r), EntityId(t)};
        const NamedTriple named = NamesOf(model, triple);
        if (known.Contains(named)) continue;
        if (options.schema_filter &&
            !SchemaConsistent(named, background.schema, background.types)
                 .consistent) {
          ++out.schema_removed;
          continue;
        }
        out.ranked.push_back(HoleScore(model, triple));
      }
    }
  }
  SortRanked(model, out.ranked);
  if (options.top_k > 0 && out.ranked.size() > options.top_k) {
    out.ranked.resize(options.top_k);
  }
  return out;
}

}  // namespace genkb
