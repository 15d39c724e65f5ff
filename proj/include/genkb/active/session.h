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

#ifndef GENKB_ACTIVE_SESSION_H_
#define GENKB_ACTIVE_SESSION_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genkb/active/objective.h"
#include "genkb/active/proposal.h"
#include "genkb/embed/model.h"
#include "json.hpp"

namespace genkb {

enum class SelectionMethod { kSubmodular, kTopK };

std::string_view ToString(SelectionMethod method);
std::optional<SelectionMethod> ParseSelectionMethod(std::string_view text);

// One active-learning episode for a single new entity. Candidates are
// addressed by fact ids "q<index into candidates>".
struct QuerySession {
  std::string entity;
  ProposalMode mode = ProposalMode::kSiblingGuided;
  SelectionMethod selection = SelectionMethod::kSubmodular;
  std::vector<std::string> siblings;
  std::vector<CandidateFact> candidates;  // L
  std::vector<CandidateFact> accepted;    // M
  Thresholds thresholds;
  SelectionWeights weights;
  std::size_t budget = 0;
  std::vector<std::size_t> selected;  // L-hat, in selection order
  std::map<std::string, QuantLabel> annotations;
  std::string model_snapshot;
  std::uint64_t seed = 0;

  static std::string FactId(std::size_t index);
  // Index into `candidates`; nullopt for malformed or out-of-range ids.
  std::optional<std::size_t> ParseFactId(std::string_view id) const;
  bool IsSelected(std::string_view id) const;

  std::vector<std::string> SelectedFactIds() const;
  std::vector<std::string> PendingFactIds() const;

  // Throws Error on any broken session invariant.
  void Validate() const;

  bool operator==(const QuerySession&) const = default;
};

// "is it true that all <s> <r> some <t>?"
std::string RenderQuestion(const NamedTriple& triple,
                           QuantLabel quantifier = QuantLabel::kAll);

// FNV-1a over the model's vocabularies and parameters, as 16 hex digits.
std::string ModelSnapshotId(const EmbeddingModel& model);

nlohmann::json ToJson(const QuerySession& session);
// Throws ParseError on malformed documents.
QuerySession SessionFromJson(const nlohmann::json& json);

}  // namespace genkb

#endif  // GENKB_ACTIVE_SESSION_H_
