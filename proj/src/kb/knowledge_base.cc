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

#include "genkb/kb/knowledge_base.h"

#include <algorithm>

namespace genkb {

std::ostream& operator<<(std::ostream& os, const NamedTriple& t) {
  return os << "(" << t.source << ", " << t.relation << ", " << t.target
            << ")";
}

KnowledgeBase::AddResult KnowledgeBase::Add(std::string_view source,
                                            std::string_view relation,
                                            std::string_view target,
                                            QuantLabel label) {
  Triple triple{InternEntity(source), InternRelation(relation),
                InternEntity(target)};
  return Add(triple, label);
}

KnowledgeBase::AddResult KnowledgeBase::Add(const Triple& triple,
                                            QuantLabel label) {
  if (triple.source.index() >= entities_.size() ||
      triple.target.index() >= entities_.size() ||
      triple.relation.index() >= relations_.size()) {
    throw std::out_of_range("triple id outside the vocabulary");
  }
  auto [it, inserted] = triples_.emplace(triple, label);
  if (inserted) return AddResult::kInserted;
  if (it->second != label) {
    std::string msg = "conflicting label for (" +
                      entities_.Name(triple.source.value) + ", " +
                      relations_.Name(triple.relation.value) + ", " +
                      entities_.Name(triple.target.value) + "): " +
                      std::string(ToString(it->second)) + " vs " +
                      std::string(ToString(label));
    throw ConflictingLabelError(msg);
  }
  return AddResult::kMerged;
}

std::optional<EntityId> KnowledgeBase::FindEntity(std::string_view name) const {
  auto id = entities_.Find(name);
  if (!id) return std::nullopt;
  return EntityId(*id);
}

std::optional<RelationId> KnowledgeBase::FindRelation(
    std::string_view name) const {
  auto id = relations_.Find(name);
  if (!id) return std::nullopt;
  return RelationId(*id);
}

std::optional<QuantLabel> KnowledgeBase::Label(const Triple& triple) const {
  auto it = triples_.find(triple);
  if (it == triples_.end()) return std::nullopt;
  return it->second;
}

std::optional<QuantLabel> KnowledgeBase::Label(
    const NamedTriple& triple) const {
  auto resolved = Resolve(triple);
  if (!resolved) return std::nullopt;
  return Label(*resolved);
}

NamedTriple KnowledgeBase::Names(const Triple& triple) const {
  return NamedTriple{entities_.Name(triple.source.value),
                     relations_.Name(triple.relation.value),
                     entities_.Name(triple.target.value)};
}

std::optional<Triple> KnowledgeBase::Resolve(const NamedTriple& triple) const {
  auto s = FindEntity(triple.source);
  auto r = FindRelation(triple.relation);
  auto t = FindEntity(triple.target);
  if (!s || !r || !t) return std::nullopt;
  return Triple{*s, *r, *t};
}

std::vector<LabeledTriple> KnowledgeBase::Canonical() const {
  std::vector<LabeledTriple> out;
  out.reserve(triples_.size());
  for (const auto& [triple, label] : triples_) {
    out.push_back({Names(triple), label});
  }
  std::sort(out.begin(), out.end());
  return out;
}

KnowledgeBase KnowledgeBase::EmptyCopy() const {
  KnowledgeBase copy;
  copy.entities_ = entities_;
  copy.relations_ = relations_;
  return copy;
}

}  // namespace genkb
