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

#include "genkb/guidance/schema_check.h"

#include <algorithm>

namespace genkb {

ConsistencyVerdict SchemaConsistent(const NamedTriple& triple,
                                    const Schema& schema,
                                    const TypeMap& types) {
  ConsistencyVerdict verdict;
  const auto* pairs = schema.Pairs(triple.relation);
  if (pairs == nullptr) {
    verdict.consistent = true;
    verdict.unconstrained = true;
    return verdict;
  }
  const auto& source_types = types.Types(triple.source);
  const auto& target_types = types.Types(triple.target);
  for (const auto& pair : *pairs) {
    if (source_types.count(pair.first) && target_types.count(pair.second)) {
      verdict.consistent = true;
      verdict.witness = pair;
      return verdict;
    }
  }
  return verdict;
}

FilterResult FilterPredictions(const std::vector<ScoredTriple>& ranked,
                               const EmbeddingModel& vocab,
                               const Schema& schema, const TypeMap& types) {
  FilterResult result;
  for (const auto& p : ranked) {
    const NamedTriple named{vocab.entities().Name(p.triple.source.value),
                            vocab.relations().Name(p.triple.relation.value),
                            vocab.entities().Name(p.triple.target.value)};
    if (SchemaConsistent(named, schema, types).consistent) {
      result.survivors.push_back(p);
    } else {
      ++result.removed;
    }
  }
  return result;
}

std::vector<std::string> UnconstrainedRelations(const KnowledgeBase& kb,
                                                const Schema& schema) {
  std::vector<std::string> out;
  for (const auto& r : kb.relations().names()) {
    if (!schema.HasRelation(r)) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace genkb
