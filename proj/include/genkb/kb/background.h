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

#ifndef GENKB_KB_BACKGROUND_H_
#define GENKB_KB_BACKGROUND_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genkb/error.h"

namespace genkb {

class CycleError : public Error {
 public:
  CycleError(std::vector<std::string> witness);
  // Closed walk child -> parent -> ... -> child.
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  std::vector<std::string> witness_;
};

// The "isa" partial order over entities. Multiple parents are allowed; the
// edge set must be acyclic.
class Taxonomy {
 public:
  Taxonomy() = default;

  // Throws CycleError with one witness cycle.
  static Taxonomy FromEdges(
      const std::vector<std::pair<std::string, std::string>>& child_parent);

  const std::set<std::string>& Parents(std::string_view entity) const;
  const std::set<std::string>& Children(std::string_view entity) const;
  // Union over all parents of their children, minus `entity`.
  std::set<std::string> Siblings(std::string_view entity) const;
  bool Contains(std::string_view entity) const;

  // Every entity mentioned by an edge, sorted.
  std::vector<std::string> Entities() const;
  std::vector<std::string> Roots() const;
  // Edges as (child, parent), sorted.
  std::vector<std::pair<std::string, std::string>> Edges() const;
  std::size_t edge_count() const;
  bool empty() const { return parents_.empty(); }

  // Shortest distance from any root; roots are at depth 0.
  std::map<std::string, int> Depths() const;

  bool operator==(const Taxonomy& other) const {
    return parents_ == other.parents_;
  }

 private:
  std::map<std::string, std::set<std::string>, std::less<>> parents_;
  std::map<std::string, std::set<std::string>, std::less<>> children_;
};

// Re-parents every entity deeper than `levels` to its ancestors at depth
// exactly `levels`. No-op when the taxonomy is shallow enough.
Taxonomy CollapseTaxonomy(const Taxonomy& taxonomy, int levels);

// Entity -> set of types. Unknown entities have no types.
class TypeMap {
 public:
  void Add(std::string_view entity, std::string_view type);
  const std::set<std::string>& Types(std::string_view entity) const;
  const std::set<std::string>& type_vocabulary() const { return types_; }
  const std::map<std::string, std::set<std::string>, std::less<>>& entries()
      const {
    return entity_types_;
  }
  bool empty() const { return entity_types_.empty(); }

 private:
  std::map<std::string, std::set<std::string>, std::less<>> entity_types_;
  std::set<std::string> types_;
};

using DomainRange = std::pair<std::string, std::string>;

// Per-relation list of admissible (domain type, range type) pairs.
class Schema {
 public:
  // Duplicate pairs are ignored.
  void Add(std::string_view relation, std::string_view domain_type,
           std::string_view range_type);
  // nullptr when the relation is absent from the schema.
  const std::vector<DomainRange>* Pairs(std::string_view relation) const;
  bool HasRelation(std::string_view relation) const {
    return Pairs(relation) != nullptr;
  }
  const std::map<std::string, std::vector<DomainRange>, std::less<>>&
  relations() const {
    return pairs_;
  }
  bool empty() const { return pairs_.empty(); }

 private:
  std::map<std::string, std::vector<DomainRange>, std::less<>> pairs_;
};

struct Background {
  Taxonomy taxonomy;
  TypeMap types;
  Schema schema;
};

}  // namespace genkb

#endif  // GENKB_KB_BACKGROUND_H_
