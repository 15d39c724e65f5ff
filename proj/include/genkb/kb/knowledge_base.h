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

#ifndef GENKB_KB_KNOWLEDGE_BASE_H_
#define GENKB_KB_KNOWLEDGE_BASE_H_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genkb/error.h"
#include "genkb/kb/quant_label.h"
#include "genkb/kb/vocabulary.h"

namespace genkb {

struct Triple {
  EntityId source;
  RelationId relation;
  EntityId target;

  auto operator<=>(const Triple&) const = default;
};

// Triple spelled with names; ordered lexicographically (source, relation,
// target), which is the canonical order used across the project.
struct NamedTriple {
  std::string source;
  std::string relation;
  std::string target;

  auto operator<=>(const NamedTriple&) const = default;
};

std::ostream& operator<<(std::ostream& os, const NamedTriple& t);

struct LabeledTriple {
  NamedTriple triple;
  QuantLabel label = QuantLabel::kNone;

  auto operator<=>(const LabeledTriple&) const = default;
};

class ConflictingLabelError : public Error {
 public:
  using Error::Error;
};

// A set of quantifier-labeled triples together with the entity and relation
// vocabularies they are spelled in.
class KnowledgeBase {
 public:
  enum class AddResult { kInserted, kMerged };

  // Interns names as needed. Re-adding a triple with the same label merges
  // silently; a different label throws ConflictingLabelError.
  AddResult Add(std::string_view source, std::string_view relation,
                std::string_view target, QuantLabel label);
  AddResult Add(const NamedTriple& triple, QuantLabel label) {
    return Add(triple.source, triple.relation, triple.target, label);
  }
  AddResult Add(const Triple& triple, QuantLabel label);

  EntityId InternEntity(std::string_view name) {
    return EntityId(entities_.Intern(name));
  }
  RelationId InternRelation(std::string_view name) {
    return RelationId(relations_.Intern(name));
  }
  std::optional<EntityId> FindEntity(std::string_view name) const;
  std::optional<RelationId> FindRelation(std::string_view name) const;

  std::optional<QuantLabel> Label(const Triple& triple) const;
  std::optional<QuantLabel> Label(const NamedTriple& triple) const;
  bool Contains(const Triple& triple) const {
    return triples_.count(triple) > 0;
  }
  bool Contains(const NamedTriple& triple) const {
    return Label(triple).has_value();
  }

  NamedTriple Names(const Triple& triple) const;
  std::optional<Triple> Resolve(const NamedTriple& triple) const;

  const std::map<Triple, QuantLabel>& triples() const { return triples_; }
  const Vocabulary& entities() const { return entities_; }
  const Vocabulary& relations() const { return relations_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  // All triples by name, sorted lexicographically.
  std::vector<LabeledTriple> Canonical() const;

  // Same vocabularies, no triples.
  KnowledgeBase EmptyCopy() const;

  // Equal as sets of named labeled triples (vocabulary order ignored).
  bool SameContent(const KnowledgeBase& other) const {
    return Canonical() == other.Canonical();
  }

 private:
  Vocabulary entities_;
  Vocabulary relations_;
  std::map<Triple, QuantLabel> triples_;
};

}  // namespace genkb

#endif  // GENKB_KB_KNOWLEDGE_BASE_H_
