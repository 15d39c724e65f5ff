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

#include "genkb/kb/background.h"

#include <algorithm>
#include <deque>
#include <functional>

namespace genkb {
namespace {

const std::set<std::string>& EmptySet() {
  static const std::set<std::string> kEmpty;
  return kEmpty;
}

std::string JoinWitness(const std::vector<std::string>& witness) {
  std::string out;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) out += " -> ";
    out += witness[i];
  }
  return out;
}

}  // namespace

CycleError::CycleError(std::vector<std::string> witness)
    : Error("taxonomy cycle: " + JoinWitness(witness)),
      witness_(std::move(witness)) {}

Taxonomy Taxonomy::FromEdges(
    const std::vector<std::pair<std::string, std::string>>& child_parent) {
  Taxonomy tax;
  for (const auto& [child, parent] : child_parent) {
    tax.parents_[child].insert(parent);
    tax.children_[parent].insert(child);
  }

  // Iterative DFS over child -> parent edges; a back edge to a node on the
  // current path closes a cycle.
  enum class Color { kWhite, kGray, kBlack };
  std::map<std::string, Color, std::less<>> color;
  for (const auto& entity : tax.Entities()) color[entity] = Color::kWhite;
  for (const auto& start : tax.Entities()) {
    if (color[start] != Color::kWhite) continue;
    std::vector<std::pair<std::string, std::vector<std::string>>> stack;
    auto push = [&](const std::string& node) {
      color[node] = Color::kGray;
      const auto& ps = tax.Parents(node);
      stack.emplace_back(node, std::vector<std::string>(ps.rbegin(), ps.rend()));
    };
    push(start);
    while (!stack.empty()) {
      auto& [node, pending] = stack.back();
      if (pending.empty()) {
        color[node] = Color::kBlack;
        stack.pop_back();
        continue;
      }
      std::string next = pending.back();
      pending.pop_back();
      if (color[next] == Color::kGray) {
        std::vector<std::string> witness;
        auto it = std::find_if(stack.begin(), stack.end(),
                               [&](const auto& f) { return f.first == next; });
        for (; it != stack.end(); ++it) witness.push_back(it->first);
        witness.push_back(next);
        throw CycleError(std::move(witness));
      }
      if (color[next] == Color::kWhite) push(next);
    }
  }
  return tax;
}

const std::set<std::string>& Taxonomy::Parents(std::string_view entity) const {
  auto it = parents_.find(entity);
  return it == parents_.end() ? EmptySet() : it->second;
}

const std::set<std::string>& Taxonomy::Children(std::string_view entity) const {
  auto it = children_.find(entity);
  return it == children_.end() ? EmptySet() : it->second;
}

std::set<std::string> Taxonomy::Siblings(std::string_view entity) const {
  std::set<std::string> out;
  for (const auto& parent : Parents(entity)) {
    const auto& kids = Children(parent);
    out.insert(kids.begin(), kids.end());
  }
  out.erase(std::string(entity));
  return out;
}

bool Taxonomy::Contains(std::string_view entity) const {
  return parents_.count(entity) > 0 || children_.count(entity) > 0;
}

std::vector<std::string> Taxonomy::Entities() const {
  std::set<std::string> all;
  for (const auto& [child, _] : parents_) all.insert(child);
  for (const auto& [parent, _] : children_) all.insert(parent);
  return {all.begin(), all.end()};
}

std::vector<std::string> Taxonomy::Roots() const {
  std::vector<std::string> out;
  for (const auto& [parent, _] : children_) {
    if (parents_.count(parent) == 0) out.push_back(parent);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> Taxonomy::Edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [child, ps] : parents_) {
    for (const auto& p : ps) out.emplace_back(child, p);
  }
  return out;
}

std::size_t Taxonomy::edge_count() const {
  std::size_t n = 0;
  for (const auto& [_, ps] : parents_) n += ps.size();
  return n;
}

std::map<std::string, int> Taxonomy::Depths() const {
  std::map<std::string, int> depth;
  std::deque<std::string> queue;
  for (const auto& root : Roots()) {
    depth[root] = 0;
    queue.push_back(root);
  }
  while (!queue.empty()) {
    std::string node = queue.front();
    queue.pop_front();
    for (const auto& child : Children(node)) {
      if (depth.count(child)) continue;
      depth[child] = depth[node] + 1;
      queue.push_back(child);
    }
  }
  return depth;
}

Taxonomy CollapseTaxonomy(const Taxonomy& taxonomy, int levels) {
  if (levels < 1) throw ConfigError("collapse levels must be >= 1");
  const auto depth = taxonomy.Depths();
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& entity : taxonomy.Entities()) {
    const int d = depth.at(entity);
    if (d <= levels) {
      for (const auto& p : taxonomy.Parents(entity)) edges.emplace_back(entity, p);
      continue;
    }
    // Walk all ancestors; keep those sitting exactly at depth `levels`.
    std::set<std::string> seen;
    std::vector<std::string> frontier(taxonomy.Parents(entity).begin(),
                                      taxonomy.Parents(entity).end());
    while (!frontier.empty()) {
      std::string a = frontier.back();
      frontier.pop_back();
      if (!seen.insert(a).second) continue;
      if (depth.at(a) == levels) {
        edges.emplace_back(entity, a);
        continue;
      }
      for (const auto& p : taxonomy.Parents(a)) frontier.push_back(p);
    }
  }
  return Taxonomy::FromEdges(edges);
}

void TypeMap::Add(std::string_view entity, std::string_view type) {
  entity_types_[std::string(entity)].insert(std::string(type));
  types_.insert(std::string(type));
}

const std::set<std::string>& TypeMap::Types(std::string_view entity) const {
  auto it = entity_types_.find(entity);
  return it == entity_types_.end() ? EmptySet() : it->second;
}

void Schema::Add(std::string_view relation, std::string_view domain_type,
                 std::string_view range_type) {
  auto& pairs = pairs_[std::string(relation)];
  DomainRange pair{std::string(domain_type), std::string(range_type)};
  if (std::find(pairs.begin(), pairs.end(), pair) == pairs.end()) {
    pairs.push_back(std::move(pair));
  }
}

const std::vector<DomainRange>* Schema::Pairs(std::string_view relation) const {
  auto it = pairs_.find(relation);
  return it == pairs_.end() ? nullptr : &it->second;
}

}  // namespace genkb
