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

#ifndef GENKB_GUIDANCE_TAXONOMY_RULES_H_
#define GENKB_GUIDANCE_TAXONOMY_RULES_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "genkb/kb/background.h"
#include "genkb/kb/knowledge_base.h"

namespace genkb {

// Quantification rules over the isa hierarchy, in priority order.
//   down-all:       (p,r,t) All                      => (c,r,t) All
//   up-all:         (c,r,t) All for every child of p => (p,r,t) All
//   up-exists-all:  (c,r,t) All for some child of p  => (p,r,t) Some
//   up-exists-some: (c,r,t) Some for some child of p => (p,r,t) Some
enum class Rule { kDownAll = 0, kUpAll, kUpExistsAll, kUpExistsSome };

std::string_view ToString(Rule rule);
std::optional<Rule> ParseRule(std::string_view text);
QuantLabel RuleLabel(Rule rule);

class RuleSet {
 public:
  static RuleSet All() { return RuleSet({true, true, true, true}); }
  static RuleSet None() { return RuleSet({false, false, false, false}); }
  // Comma-separated rule names, or "all" / "none".
  static RuleSet Parse(std::string_view text);

  bool Has(Rule rule) const { return enabled_[static_cast<int>(rule)]; }
  RuleSet& Enable(Rule rule, bool on = true) {
    enabled_[static_cast<int>(rule)] = on;
    return *this;
  }
  bool operator==(const RuleSet&) const = default;

 private:
  explicit RuleSet(std::array<bool, 4> enabled) : enabled_(enabled) {}
  std::array<bool, 4> enabled_;
};

struct DerivedTriple {
  NamedTriple triple;
  QuantLabel label = QuantLabel::kAll;
  Rule rule = Rule::kDownAll;
  // Premises that fire `rule` in the final state, sorted.
  std::vector<NamedTriple> provenance;

  bool operator==(const DerivedTriple&) const = default;
};

// Applies the enabled rules until no label changes. Labels only move up
// (Some to All); triples already in `kb`, whatever their label, are never
// derived and None facts never act as premises. up-all needs the parent to
// have at least two children. Each result carries the highest-priority rule
// that yields its final label. Sorted by triple.
std::vector<DerivedTriple> ExpandTaxonomy(const KnowledgeBase& kb,
                                          const Taxonomy& taxonomy,
                                          RuleSet rules = RuleSet::All());

}  // namespace genkb

#endif  // GENKB_GUIDANCE_TAXONOMY_RULES_H_
