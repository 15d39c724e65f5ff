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

#include "genkb/active/diversity.h"

#include <set>
#include <vector>

namespace genkb {

DiversityIndex DiversityIndex::Compute(const KnowledgeBase& kb) {
  DiversityIndex index;
  index.num_entities_ = kb.entities().size();
  index.num_relations_ = kb.relations().size();
  const std::size_t ne = index.num_entities_;
  const std::size_t nr = index.num_relations_;
  std::vector<std::set<int>> rel_sources(nr), rel_targets(nr);
  std::vector<std::set<int>> ent_relations(ne), ent_sources(ne);
  for (const auto& [t, _] : kb.triples()) {
    rel_sources[t.relation.index()].insert(t.source.value);
    rel_targets[t.relation.index()].insert(t.target.value);
    ent_relations[t.target.index()].insert(t.relation.value);
    ent_sources[t.target.index()].insert(t.source.value);
  }
  for (std::size_t r = 0; r < nr && ne > 0; ++r) {
    index.relation_[kb.relations().Name(static_cast<int>(r))] =
        static_cast<double>(rel_sources[r].size() + rel_targets[r].size()) /
        static_cast<double>(ne);
  }
  for (std::size_t e = 0; e < ne; ++e) {
    index.entity_[kb.entities().Name(static_cast<int>(e))] =
        static_cast<double>(ent_relations[e].size() + ent_sources[e].size()) /
        static_cast<double>(nr + ne);
  }
  return index;
}

double DiversityIndex::Relation(const std::string& relation) const {
  auto it = relation_.find(relation);
  return it == relation_.end() ? 0.0 : it->second;
}

double DiversityIndex::Entity(const std::string& entity) const {
  auto it = entity_.find(entity);
  return it == entity_.end() ? 0.0 : it->second;
}

}  // namespace genkb
