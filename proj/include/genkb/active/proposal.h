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

#ifndef GENKB_ACTIVE_PROPOSAL_H_
#define GENKB_ACTIVE_PROPOSAL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genkb/kb/background.h"
#include "genkb/kb/knowledge_base.h"

namespace genkb {

enum class Orientation { kSource, kTarget };  // slot taken by the new entity

enum class ProposalMode { kRandom, kSchemaConsistent, kSiblingGuided };

std::string_view ToString(Orientation o);
std::string_view ToString(ProposalMode mode);
std::optional<ProposalMode> ParseProposalMode(std::string_view text);

struct CandidateFact {
  std::string relation;
  std::string other;
  Orientation orientation = Orientation::kSource;
  double p = 0.5;

  // The triple this candidate asserts about `entity`.
  NamedTriple Project(const std::string& entity) const;
  bool operator==(const CandidateFact&) const = default;
};

struct Thresholds {
  double kappa_m = 0.9;
  double tau_low = 0.2;
  double tau_high = 0.8;

  // Requires kappa_m > tau_high > tau_low >= 0 and kappa_m <= 1.
  void Validate() const;
  bool operator==(const Thresholds&) const = default;
};

// The new entity has no siblings, or none of them has a fact.
class ColdEntityError : public Error {
 public:
  explicit ColdEntityError(const std::string& entity)
      : Error("cold entity '" + entity +
              "': no sibling has a fact; fall back to schema-consistent "
              "proposal") {}
};

// Share of active siblings s (siblings with at least one fact in any slot)
// holding (s, relation, other) (or (other, relation, s) for the target
// orientation) with label All or Some. Throws ColdEntityError when there is
// no active sibling.
double EstimateConditional(const std::string& entity,
                           const std::string& relation,
                           const std::string& other, Orientation orientation,
                           const KnowledgeBase& kb, const Taxonomy& taxonomy);

struct Proposal {
  ProposalMode mode = ProposalMode::kSiblingGuided;
  std::vector<std::string> siblings;
  std::vector<CandidateFact> candidates;  // L, in query order
  std::vector<CandidateFact> accepted;    // M, sorted by projected triple
};

// Sibling-guided: every sibling fact projected onto `entity`, routed by
// its estimate (p >= kappa_m to M, tau_low <= p <= tau_high to L), L most
// uncertain first with ties in projected-triple order.
// Schema-consistent: every schema-consistent pair, p = 0.5, seeded order.
// Random: every pair, unfiltered, p = 0.5, seeded order.
// Candidates never repeat a triple already in `kb` and never pair the
// entity with itself. Sibling-guided and schema-consistent candidates all
// pass the schema check.
Proposal ProposeQueries(const std::string& entity, const KnowledgeBase& kb,
                        const Background& background,
                        const Thresholds& thresholds, ProposalMode mode,
                        std::uint64_t seed);

}  // namespace genkb

#endif  // GENKB_ACTIVE_PROPOSAL_H_
