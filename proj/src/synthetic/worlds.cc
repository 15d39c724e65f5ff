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

#include "genkb/synthetic/worlds.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <tuple>

namespace genkb::synthetic {
namespace {

std::string Name(const char* prefix, int i) {
  return prefix + std::to_string(i);
}

}  // namespace

BlockTensor MakeBlockTensor(const BlockTensorConfig& config) {
  if (config.entities < 2 || config.clusters < 1 || config.relations < 1) {
    throw ConfigError("block tensor needs >= 2 entities, >= 1 cluster/relation");
  }
  BlockTensor out;
  for (int e = 0; e < config.entities; ++e) out.train.InternEntity(Name("e", e));
  for (int r = 0; r < config.relations; ++r) out.train.InternRelation(Name("r", r));

  std::vector<Triple> positives;
  for (int s = 0; s < config.entities; ++s) {
    for (int t = 0; t < config.entities; ++t) {
      if (s == t) continue;
      for (int r = 0; r < config.relations; ++r) {
        const Triple triple{EntityId(s), RelationId(r), EntityId(t)};
        if (t % config.clusters == (s + r) % config.clusters) {
          positives.push_back(triple);
        } else {
          out.negatives.push_back(triple);
        }
      }
    }
  }
  std::mt19937_64 rng(config.seed);
  std::shuffle(positives.begin(), positives.end(), rng);
  const auto observed = static_cast<std::size_t>(
      config.observed_fraction * static_cast<double>(positives.size()));
  for (std::size_t i = 0; i < positives.size(); ++i) {
    if (i < observed) {
      out.train.Add(positives[i], QuantLabel::kAll);
    } else {
      out.held_out.push_back(positives[i]);
    }
  }
  return out;
}

double RankingAuc(std::vector<double> positive, std::vector<double> negative) {
  if (positive.empty() || negative.empty()) {
    throw ConfigError("AUC needs at least one positive and one negative");
  }
  std::sort(negative.begin(), negative.end());
  double wins = 0.0;
  for (double p : positive) {
    const auto lo = std::lower_bound(negative.begin(), negative.end(), p);
    const auto hi = std::upper_bound(negative.begin(), negative.end(), p);
    wins += static_cast<double>(lo - negative.begin()) +
            0.5 * static_cast<double>(hi - lo);
  }
  return wins / (static_cast<double>(positive.size()) *
                 static_cast<double>(negative.size()));
}

SetWorld SetWorld::Make(const SetWorldConfig& config) {
  if (config.generics < 2 || config.individuals < 1) {
    throw ConfigError("set world needs >= 2 generics and >= 1 individual");
  }
  std::mt19937_64 rng(config.seed);
  SetWorld world;

  // Parents always have smaller indices than their children.
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::vector<int>> children(config.generics);
  for (int i = 1; i < config.generics; ++i) {
    const int p = static_cast<int>(rng() % i);
    edges.emplace_back(Name("g", i), Name("g", p));
    children[p].push_back(i);
    if (i > 2 && rng() % 10 == 0) {
      const int q = static_cast<int>(rng() % i);
      if (q != p) {
        edges.emplace_back(Name("g", i), Name("g", q));
        children[q].push_back(i);
      }
    }
  }
  world.taxonomy_ = Taxonomy::FromEdges(edges);

  std::uniform_int_distribution<int> who(0, config.individuals - 1);
  std::vector<std::set<int>> members(config.generics);
  for (int i = config.generics - 1; i >= 0; --i) {
    if (children[i].empty()) {
      const int size = 1 + static_cast<int>(rng() % 6);
      for (int k = 0; k < size; ++k) members[i].insert(who(rng));
    } else {
      for (int c : children[i]) members[i].insert(members[c].begin(), members[c].end());
    }
    world.members_[Name("g", i)] = members[i];
  }

  std::bernoulli_distribution noise(0.15);
  std::bernoulli_distribution observe(config.observed_fraction);
  std::uniform_int_distribution<int> any_generic(0, config.generics - 1);
  for (int r = 0; r < config.relations; ++r) {
    for (int t = 0; t < config.targets; ++t) {
      std::set<int> sat;
      const int anchors = 1 + static_cast<int>(rng() % 2);
      for (int a = 0; a < anchors; ++a) {
        const auto& m = members[any_generic(rng)];
        sat.insert(m.begin(), m.end());
      }
      for (int u = 0; u < config.individuals; ++u) {
        if (noise(rng)) sat.insert(u);
      }
      world.satisfying_[{Name("r", r), Name("t", t)}] = std::move(sat);
    }
  }
  for (int g = 0; g < config.generics; ++g) {
    for (int r = 0; r < config.relations; ++r) {
      for (int t = 0; t < config.targets; ++t) {
        if (!observe(rng)) continue;
        const NamedTriple triple{Name("g", g), Name("r", r), Name("t", t)};
        world.observed_.Add(triple, world.Truth(triple));
      }
    }
  }
  return world;
}

QuantLabel SetWorld::Truth(const NamedTriple& triple) const {
  const auto& members = members_.at(triple.source);
  const auto& sat = satisfying_.at({triple.relation, triple.target});
  std::size_t hits = 0;
  for (int m : members) hits += sat.count(m);
  if (hits == members.size()) return QuantLabel::kAll;
  return hits > 0 ? QuantLabel::kSome : QuantLabel::kNone;
}

bool SetWorld::Agrees(const NamedTriple& triple, QuantLabel derived) const {
  const QuantLabel truth = Truth(triple);
  switch (derived) {
    case QuantLabel::kAll:
      return truth == QuantLabel::kAll;
    case QuantLabel::kSome:
      return truth != QuantLabel::kNone;
    case QuantLabel::kNone:
      return truth == QuantLabel::kNone;
  }
  return false;
}

TaxonomyTensor MakeTaxonomyTensor(const TaxonomyTensorConfig& config) {
  std::mt19937_64 rng(config.seed);
  TaxonomyTensor out;
  std::vector<std::pair<int, int>> facts;  // (relation, target)
  for (int r = 0; r < config.relations; ++r)
    for (int t = 0; t < config.targets; ++t) facts.emplace_back(r, t);
  if (config.inherited_per_parent + config.own_per_child >
      static_cast<int>(facts.size())) {
    throw ConfigError("taxonomy tensor: not enough (relation, target) pairs");
  }
  for (int t = 0; t < config.targets; ++t) {
    out.targets.push_back(Name("t", t));
    out.background.types.Add(Name("t", t), "object");
  }
  for (int r = 0; r < config.relations; ++r) {
    out.background.schema.Add(Name("r", r), "organism", "object");
  }

  const int held_parent = static_cast<int>(rng() % config.parents);
  const int held_child = static_cast<int>(rng() % config.children_per_parent);
  std::vector<std::pair<std::string, std::string>> edges;
  for (int p = 0; p < config.parents; ++p) {
    const std::string parent = Name("p", p);
    out.background.types.Add(parent, "organism");
    std::shuffle(facts.begin(), facts.end(), rng);
    const std::vector<std::pair<int, int>> inherited(
        facts.begin(), facts.begin() + config.inherited_per_parent);
    for (const auto& [r, t] : inherited) {
      out.train.Add(parent, Name("r", r), Name("t", t), QuantLabel::kAll);
    }
    for (int c = 0; c < config.children_per_parent; ++c) {
      const std::string child = parent + "_c" + std::to_string(c);
      edges.emplace_back(child, parent);
      out.background.types.Add(child, "organism");
      const bool held = p == held_parent && c == held_child;
      for (const auto& [r, t] : inherited) {
        const NamedTriple triple{child, Name("r", r), Name("t", t)};
        if (held) {
          out.held_out.push_back(triple);
        } else {
          out.train.Add(triple, QuantLabel::kAll);
        }
      }
      std::vector<std::pair<int, int>> rest(
          facts.begin() + config.inherited_per_parent, facts.end());
      std::shuffle(rest.begin(), rest.end(), rng);
      for (int k = 0; k < config.own_per_child; ++k) {
        out.train.Add(child, Name("r", rest[k].first), Name("t", rest[k].second),
                      QuantLabel::kAll);
      }
      if (held) out.held_out_child = child;
    }
  }
  out.background.taxonomy = Taxonomy::FromEdges(edges);
  std::sort(out.held_out.begin(), out.held_out.end());
  return out;
}

SiblingWorld MakeSiblingWorld(const SiblingWorldConfig& config) {
  if (config.categories < 1 || config.children_per_category < 1 ||
      config.trait_values < 1 || config.group_size < 1 ||
      config.traits > config.relations ||
      config.core_relations > config.relations ||
      1 + config.trait_values > config.target_groups) {
    throw ConfigError("sibling world: not enough relations or target groups");
  }
  std::mt19937_64 rng(config.seed);
  SiblingWorld out;
  auto target = [&](int group, int k) {
    return "o" + std::to_string(group) + "_" + std::to_string(k);
  };
  for (int g = 0; g < config.target_groups; ++g) {
    for (int k = 0; k < config.group_size; ++k) {
      out.background.types.Add(target(g, k), "object");
    }
  }
  for (int r = 0; r < config.relations; ++r) {
    out.background.schema.Add(Name("r", r), "organism", "object");
  }
  // A property is (relation, group, member).
  using Property = std::tuple<int, int, int>;
  using Block = std::set<Property>;
  auto block = [&](int relation, int group) {
    Block b;
    for (int k = 0; k < config.group_size; ++k) b.emplace(relation, group, k);
    return b;
  };
  std::vector<int> relations(config.relations), groups(config.target_groups);
  std::iota(relations.begin(), relations.end(), 0);
  std::iota(groups.begin(), groups.end(), 0);

  std::vector<std::pair<std::string, std::string>> edges;
  for (int c = 0; c < config.categories; ++c) {
    const std::string category = Name("c", c);
    out.background.types.Add(category, "organism");
    std::shuffle(groups.begin(), groups.end(), rng);
    std::shuffle(relations.begin(), relations.end(), rng);
    Block core;
    for (int i = 0; i < config.core_relations; ++i) {
      core.merge(block(relations[i], groups[0]));
    }
    // blocks[j][v]: the properties of value v of trait j.
    std::vector<std::vector<Block>> blocks(config.traits);
    Block shared = core;
    std::vector<int> free_groups(groups.begin() + 1, groups.end());
    for (int j = 0; j < config.traits; ++j) {
      std::shuffle(free_groups.begin(), free_groups.end(), rng);
      for (int v = 0; v < config.trait_values; ++v) {
        blocks[j].push_back(block(j, free_groups[v]));
        shared.insert(blocks[j][v].begin(), blocks[j][v].end());
      }
    }
    std::vector<Property> rest;
    for (int r = 0; r < config.relations; ++r)
      for (int g = 0; g < config.target_groups; ++g)
        for (int k = 0; k < config.group_size; ++k)
          if (!shared.count({r, g, k})) rest.emplace_back(r, g, k);
    const int members = config.children_per_category + (c == 0 ? 1 : 0);
    if (static_cast<int>(rest.size()) < members * config.own_per_child) {
      throw ConfigError("sibling world: no room for per-child facts");
    }
    // Per-child facts are never shared within the category.
    std::shuffle(rest.begin(), rest.end(), rng);

    // values[j][k]: value of trait j for child k, balanced over the
    // existing children.
    std::vector<std::vector<int>> values(config.traits);
    for (int j = 0; j < config.traits; ++j) {
      for (int k = 0; k < config.children_per_category; ++k) {
        values[j].push_back(k % config.trait_values);
      }
      std::shuffle(values[j].begin(), values[j].end(), rng);
      values[j].push_back(static_cast<int>(rng() % config.trait_values));
    }
    for (int k = 0; k < members; ++k) {
      const bool is_new = k == config.children_per_category;
      const std::string child =
          is_new ? category + "_new" : category + "_k" + std::to_string(k);
      edges.emplace_back(child, category);
      out.background.types.Add(child, "organism");
      Block facts = core;
      for (int j = 0; j < config.traits; ++j) {
        const auto& b = blocks[j][values[j][k]];
        facts.insert(b.begin(), b.end());
        if (is_new) out.new_entity_traits.push_back(values[j][k]);
      }
      const auto own = rest.begin() + k * config.own_per_child;
      facts.insert(own, own + config.own_per_child);
      for (const auto& [r, g, m] : facts) {
        const NamedTriple triple{child, Name("r", r), target(g, m)};
        out.truth[triple] = QuantLabel::kAll;
        if (is_new) {
          out.new_entity_facts.push_back(triple);
        } else {
          out.kb.Add(triple, QuantLabel::kAll);
        }
      }
      if (is_new) out.new_entity = child;
    }
  }
  out.background.taxonomy = Taxonomy::FromEdges(edges);
  std::sort(out.new_entity_facts.begin(), out.new_entity_facts.end());
  return out;
}

}  // namespace genkb::synthetic
