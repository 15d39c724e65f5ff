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

#include "genkb/guidance/taxonomy_rules.h"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace genkb {
namespace {

constexpr std::array<std::string_view, 4> kRuleNames = {
    "down-all", "up-all", "up-exists-all", "up-exists-some"};

using Labels = std::map<std::string, QuantLabel, std::less<>>;

std::optional<QuantLabel> Find(const Labels& labels, const std::string& e) {
  auto it = labels.find(e);
  if (it == labels.end()) return std::nullopt;
  return it->second;
}

bool Has(const Labels& labels, const std::string& e, QuantLabel want) {
  auto l = Find(labels, e);
  return l && *l == want;
}

// Best label the up rules give parent `p`, if any.
std::optional<std::pair<QuantLabel, Rule>> UpRule(const Taxonomy& taxonomy,
                                                  const Labels& labels,
                                                  const std::string& p,
                                                  RuleSet rules) {
  const auto& kids = taxonomy.Children(p);
  bool all_all = kids.size() >= 2;
  bool any_all = false;
  bool any_some = false;
  for (const auto& c : kids) {
    const bool is_all = Has(labels, c, QuantLabel::kAll);
    all_all = all_all && is_all;
    any_all = any_all || is_all;
    any_some = any_some || Has(labels, c, QuantLabel::kSome);
  }
  if (rules.Has(Rule::kUpAll) && all_all) {
    return std::make_pair(QuantLabel::kAll, Rule::kUpAll);
  }
  if (rules.Has(Rule::kUpExistsAll) && any_all) {
    return std::make_pair(QuantLabel::kSome, Rule::kUpExistsAll);
  }
  if (rules.Has(Rule::kUpExistsSome) && any_some) {
    return std::make_pair(QuantLabel::kSome, Rule::kUpExistsSome);
  }
  return std::nullopt;
}

bool Upgrade(Labels& labels, const std::string& e, QuantLabel label) {
  auto it = labels.find(e);
  if (it == labels.end()) {
    labels.emplace(e, label);
    return true;
  }
  if (label > it->second) {
    it->second = label;
    return true;
  }
  return false;
}

}  // namespace

std::string_view ToString(Rule rule) { return kRuleNames[static_cast<int>(rule)]; }

std::optional<Rule> ParseRule(std::string_view text) {
  for (int i = 0; i < 4; ++i) {
    if (kRuleNames[i] == text) return static_cast<Rule>(i);
  }
  return std::nullopt;
}

QuantLabel RuleLabel(Rule rule) {
  return rule == Rule::kDownAll || rule == Rule::kUpAll ? QuantLabel::kAll
                                                        : QuantLabel::kSome;
}

RuleSet RuleSet::Parse(std::string_view text) {
  if (text == "all") return All();
  if (text == "none" || text.empty()) return None();
  RuleSet set = None();
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const auto name = text.substr(start, comma - start);
    auto rule = ParseRule(name);
    if (!rule) throw ConfigError("unknown rule '" + std::string(name) + "'");
    set.Enable(*rule);
    start = comma + 1;
  }
  return set;
}

std::vector<DerivedTriple> ExpandTaxonomy(const KnowledgeBase& kb,
                                          const Taxonomy& taxonomy,
                                          RuleSet rules) {
  // Rules never mix (relation, target) groups, so each group is closed on
  // its own.
  std::map<std::pair<std::string, std::string>, Labels> groups;
  for (const auto& [t, label] : kb.triples()) {
    const NamedTriple n = kb.Names(t);
    groups[{n.relation, n.target}].emplace(n.source, label);
  }

  std::vector<DerivedTriple> out;
  for (const auto& [key, given] : groups) {
    const auto& [relation, target] = key;
    Labels labels;
    for (const auto& [e, label] : given) {
      if (label != QuantLabel::kNone) labels.emplace(e, label);
    }
    auto blocked = [&](const std::string& e) { return given.count(e) > 0; };

    bool changed = true;
    while (changed) {
      changed = false;
      if (rules.Has(Rule::kDownAll)) {
        std::vector<std::string> alls;
        for (const auto& [e, l] : labels) {
          if (l == QuantLabel::kAll) alls.push_back(e);
        }
        for (const auto& e : alls) {
          for (const auto& c : taxonomy.Children(e)) {
            if (!blocked(c)) changed |= Upgrade(labels, c, QuantLabel::kAll);
          }
        }
      }
      std::set<std::string> parents;
      for (const auto& [e, _] : labels) {
        const auto& ps = taxonomy.Parents(e);
        parents.insert(ps.begin(), ps.end());
      }
      for (const auto& p : parents) {
        if (blocked(p)) continue;
        if (auto up = UpRule(taxonomy, labels, p, rules)) {
          changed |= Upgrade(labels, p, up->first);
        }
      }
    }

    for (const auto& [e, label] : labels) {
      if (blocked(e)) continue;
      DerivedTriple d{{e, relation, target}, label, Rule::kDownAll, {}};
      std::vector<std::string> premises;
      bool down = false;
      if (label == QuantLabel::kAll && rules.Has(Rule::kDownAll)) {
        for (const auto& p : taxonomy.Parents(e)) {
          if (Has(labels, p, QuantLabel::kAll)) premises.push_back(p);
        }
        down = !premises.empty();
      }
      if (!down) {
        auto up = UpRule(taxonomy, labels, e, rules);
        // The fixpoint guarantees the up rules reproduce the final label.
        d.rule = up->second;
        const QuantLabel premise_label =
            d.rule == Rule::kUpExistsSome ? QuantLabel::kSome : QuantLabel::kAll;
        for (const auto& c : taxonomy.Children(e)) {
          if (Has(labels, c, premise_label)) premises.push_back(c);
        }
      }
      for (const auto& p : premises) d.provenance.push_back({p, relation, target});
      std::sort(d.provenance.begin(), d.provenance.end());
      out.push_back(std::move(d));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const DerivedTriple& a, const DerivedTriple& b) {
              return a.triple < b.triple;
            });
  return out;
}

}  // namespace genkb
