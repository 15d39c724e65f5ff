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

#include "genkb/active/proposal.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "genkb/guidance/schema_check.h"

namespace genkb {
namespace {

using CandidateKey = std::tuple<std::string, std::string, Orientation>;

bool HasAnyFact(const std::string& entity, const KnowledgeBase& kb) {
  auto id = kb.FindEntity(entity);
  if (!id) return false;
  for (const auto& [t, _] : kb.triples()) {
    if (t.source == *id || t.target == *id) return true;
  }
  return false;
}

std::vector<std::string> ActiveSiblings(const std::string& entity,
                                        const KnowledgeBase& kb,
                                        const Taxonomy& taxonomy) {
  std::vector<std::string> active;
  for (const auto& s : taxonomy.Siblings(entity)) {
    if (HasAnyFact(s, kb)) active.push_back(s);
  }
  return active;
}

double Estimate(const std::vector<std::string>& active,
                const std::string& relation, const std::string& other,
                Orientation orientation, const KnowledgeBase& kb) {
  std::size_t holding = 0;
  for (const auto& s : active) {
    NamedTriple t = orientation == Orientation::kSource
                        ? NamedTriple{s, relation, other}
                        : NamedTriple{other, relation, s};
    auto label = kb.Label(t);
    if (label && IsPositive(*label)) ++holding;
  }
  return static_cast<double>(holding) / static_cast<double>(active.size());
}

bool Admissible(const std::string& entity, const CandidateFact& c,
                const KnowledgeBase& kb) {
  return c.other != entity && !kb.Contains(c.Project(entity));
}

}  // namespace

std::string_view ToString(Orientation o) {
  return o == Orientation::kSource ? "source" : "target";
}

std::string_view ToString(ProposalMode mode) {
  switch (mode) {
    case ProposalMode::kRandom: return "random";
    case ProposalMode::kSchemaConsistent: return "schema-consistent";
    case ProposalMode::kSiblingGuided: return "sibling-guided";
  }
  return "sibling-guided";
}

std::optional<ProposalMode> ParseProposalMode(std::string_view text) {
  for (auto m : {ProposalMode::kRandom, ProposalMode::kSchemaConsistent,
                 ProposalMode::kSiblingGuided}) {
    if (text == ToString(m)) return m;
  }
  return std::nullopt;
}

NamedTriple CandidateFact::Project(const std::string& entity) const {
  return orientation == Orientation::kSource
             ? NamedTriple{entity, relation, other}
             : NamedTriple{other, relation, entity};
}

void Thresholds::Validate() const {
  if (!(tau_low >= 0.0 && tau_low < tau_high && tau_high < kappa_m &&
        kappa_m <= 1.0)) {
    throw ConfigError(
        "thresholds must satisfy 0 <= tau_low < tau_high < kappa_m <= 1");
  }
}

double EstimateConditional(const std::string& entity,
                           const std::string& relation,
                           const std::string& other, Orientation orientation,
                           const KnowledgeBase& kb, const Taxonomy& taxonomy) {
  auto active = ActiveSiblings(entity, kb, taxonomy);
  if (active.empty()) throw ColdEntityError(entity);
  return Estimate(active, relation, other, orientation, kb);
}

Proposal ProposeQueries(const std::string& entity, const KnowledgeBase& kb,
                        const Background& background,
                        const Thresholds& thresholds, ProposalMode mode,
                        std::uint64_t seed) {
  thresholds.Validate();
  Proposal out;
  out.mode = mode;
  const auto siblings = background.taxonomy.Siblings(entity);
  out.siblings.assign(siblings.begin(), siblings.end());

  if (mode == ProposalMode::kSiblingGuided) {
    auto active = ActiveSiblings(entity, kb, background.taxonomy);
    if (active.empty()) throw ColdEntityError(entity);
    std::set<CandidateKey> seen;
    for (const auto& s : active) {
      const EntityId sid = *kb.FindEntity(s);
      for (const auto& [t, _] : kb.triples()) {
        if (t.source == sid) {
          seen.emplace(kb.relations().Name(t.relation.value),
                       kb.entities().Name(t.target.value),
                       Orientation::kSource);
        }
        if (t.target == sid) {
          seen.emplace(kb.relations().Name(t.relation.value),
                       kb.entities().Name(t.source.value),
                       Orientation::kTarget);
        }
      }
    }
    for (const auto& [relation, other, orientation] : seen) {
      CandidateFact c{relation, other, orientation, 0.0};
      if (!Admissible(entity, c, kb)) continue;
      if (!SchemaConsistent(c.Project(entity), background.schema,
                            background.types)
               .consistent) {
        continue;
      }
      c.p = Estimate(active, relation, other, orientation, kb);
      if (c.p >= thresholds.kappa_m) {
        out.accepted.push_back(std::move(c));
      } else if (c.p >= thresholds.tau_low && c.p <= thresholds.tau_high) {
        out.candidates.push_back(std::move(c));
      }
    }
    auto by_triple = [&](const CandidateFact& a, const CandidateFact& b) {
      return a.Project(entity) < b.Project(entity);
    };
    std::sort(out.accepted.begin(), out.accepted.end(), by_triple);
    std::stable_sort(out.candidates.begin(), out.candidates.end(), by_triple);
    std::stable_sort(out.candidates.begin(), out.candidates.end(),
                     [](const CandidateFact& a, const CandidateFact& b) {
                       return std::abs(a.p - 0.5) < std::abs(b.p - 0.5);
                     });
    return out;
  }

  const bool filter = mode == ProposalMode::kSchemaConsistent;
  for (const auto& relation : kb.relations().names()) {
    for (const auto& other : kb.entities().names()) {
      for (auto o : {Orientation::kSource, Orientation::kTarget}) {
        CandidateFact c{relation, other, o, 0.5};
        if (!Admissible(entity, c, kb)) continue;
        if (filter && !SchemaConsistent(c.Project(entity), background.schema,
                                        background.types)
                           .consistent) {
          continue;
        }
        out.candidates.push_back(std::move(c));
      }
    }
  }
  std::sort(out.candidates.begin(), out.candidates.end(),
            [&](const CandidateFact& a, const CandidateFact& b) {
              return a.Project(entity) < b.Project(entity);
            });
  std::mt19937_64 rng(seed);
  std::shuffle(out.candidates.begin(), out.candidates.end(), rng);
  return out;
}

}  // namespace genkb
