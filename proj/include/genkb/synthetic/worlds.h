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

#ifndef GENKB_SYNTHETIC_WORLDS_H_
#define GENKB_SYNTHETIC_WORLDS_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "genkb/kb/background.h"
#include "genkb/kb/knowledge_base.h"

namespace genkb::synthetic {

// Entities in `clusters` groups (entity i in group i mod clusters);
// (s, r, t) holds iff group(t) == (group(s) + r) mod clusters and s != t.
struct BlockTensorConfig {
  int entities = 24;
  int clusters = 2;
  int relations = 2;
  // Share of true triples placed in the training KB; the rest is held out.
  double observed_fraction = 0.7;
  std::uint64_t seed = 1;
};

struct BlockTensor {
  KnowledgeBase train;  // vocabulary covers every entity and relation
  std::vector<Triple> held_out;
  std::vector<Triple> negatives;  // every false triple with s != t
};

BlockTensor MakeBlockTensor(const BlockTensorConfig& config);

// Probability that a random positive outscores a random negative, ties
// counting one half.
double RankingAuc(std::vector<double> positive, std::vector<double> negative);

// Generics as explicit sets of individuals. Leaves own random member sets;
// an inner node's members are the union of its children's. Each
// (relation, target) property holds for a random set of individuals.
struct SetWorldConfig {
  int generics = 50;
  int individuals = 60;
  int relations = 3;
  int targets = 4;
  double observed_fraction = 0.4;
  std::uint64_t seed = 1;
};

class SetWorld {
 public:
  static SetWorld Make(const SetWorldConfig& config);

  // All if every member satisfies the property, Some if at least one does,
  // None otherwise.
  QuantLabel Truth(const NamedTriple& triple) const;
  // Derived Some is read existentially, so it also agrees with All.
  bool Agrees(const NamedTriple& triple, QuantLabel derived) const;

  const KnowledgeBase& observed() const { return observed_; }
  const Taxonomy& taxonomy() const { return taxonomy_; }
  const std::set<int>& Members(const std::string& generic) const {
    return members_.at(generic);
  }

 private:
  Taxonomy taxonomy_;
  std::map<std::string, std::set<int>> members_;
  std::map<std::pair<std::string, std::string>, std::set<int>> satisfying_;
  KnowledgeBase observed_;
};

// Parents with inherited All facts and children that hold them plus a few
// facts of their own. One child's inherited facts are withheld from the KB.
struct TaxonomyTensorConfig {
  int parents = 3;
  int children_per_parent = 4;
  int targets = 8;
  int relations = 2;
  int inherited_per_parent = 4;
  int own_per_child = 2;
  std::uint64_t seed = 1;
};

struct TaxonomyTensor {
  KnowledgeBase train;
  Background background;
  std::string held_out_child;
  std::vector<NamedTriple> held_out;
  std::vector<std::string> targets;
};

TaxonomyTensor MakeTaxonomyTensor(const TaxonomyTensorConfig& config);

// Targets come in groups of interchangeable objects. Categories' children
// share a core block (a few relations times one group) and differ in a few
// traits: trait j lives on relation r<j>, each of its values owns a target
// group, and a child holding that value has r<j> to every member of the
// group. Values are balanced across the existing children and drawn at
// random for the new entity, an extra child of category 0 with no facts in
// the KB. Every child also has a few facts no sibling shares.
struct SiblingWorldConfig {
  int categories = 4;
  int children_per_category = 8;
  int relations = 4;
  int target_groups = 48;
  int group_size = 3;
  int core_relations = 2;
  int traits = 4;
  int trait_values = 2;
  int own_per_child = 1;
  std::uint64_t seed = 1;
};

struct SiblingWorld {
  KnowledgeBase kb;
  Background background;
  std::string new_entity;
  std::vector<int> new_entity_traits;
  // Every true fact of every child, the new entity included.
  std::map<NamedTriple, QuantLabel> truth;
  std::vector<NamedTriple> new_entity_facts;
};

SiblingWorld MakeSiblingWorld(const SiblingWorldConfig& config);

}  // namespace genkb::synthetic

#endif  // GENKB_SYNTHETIC_WORLDS_H_
