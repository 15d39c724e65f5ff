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

#include "genkb/active/episode.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "genkb/active/diversity.h"
#include "genkb/guidance/predict.h"

namespace genkb {
namespace {

// Most frequent positive label among siblings holding the fact; Some on a
// tie or when none holds it.
QuantLabel SiblingLabel(const QuerySession& session, const CandidateFact& c,
                        const KnowledgeBase& kb) {
  std::size_t all = 0, some = 0;
  for (const auto& s : session.siblings) {
    auto label = kb.Label(c.Project(s));
    if (label == QuantLabel::kAll) ++all;
    if (label == QuantLabel::kSome) ++some;
  }
  return all > some ? QuantLabel::kAll : QuantLabel::kSome;
}

}  // namespace

QuantLabel TruthAnnotator::Annotate(const NamedTriple& triple) {
  ++calls_;
  auto it = truth_.find(triple);
  return it == truth_.end() ? QuantLabel::kNone : it->second;
}

void EpisodeConfig::Validate() const {
  thresholds.Validate();
  weights.Validate();
  train.Validate();
  if (!(report_threshold > 0.0 && report_threshold < 1.0)) {
    throw ConfigError("report threshold must lie in (0, 1)");
  }
}

std::string_view ToString(Provenance provenance) {
  switch (provenance) {
    case Provenance::kAnnotation: return "annotation";
    case Provenance::kSiblingAgreement: return "sibling-agreement";
    case Provenance::kFactorization: return "factorization";
  }
  return "factorization";
}

QuerySession StartSession(const std::string& entity, const KnowledgeBase& kb,
                          const Background& background,
                          const EmbeddingModel& snapshot,
                          const EpisodeConfig& config) {
  config.Validate();
  QuerySession session;
  auto proposal = ProposeQueries(entity, kb, background, config.thresholds,
                                 config.mode, config.seed);
  session.entity = entity;
  session.mode = config.mode;
  session.selection = config.selection;
  session.siblings = std::move(proposal.siblings);
  session.candidates = std::move(proposal.candidates);
  session.accepted = std::move(proposal.accepted);
  session.thresholds = config.thresholds;
  session.weights = config.weights;
  session.budget = config.budget;
  session.model_snapshot = ModelSnapshotId(snapshot);
  session.seed = config.seed;
  if (config.budget == 0 || session.candidates.empty()) return session;
  if (config.selection == SelectionMethod::kTopK) {
    session.selected = TopK(session.candidates.size(), config.budget);
  } else {
    SelectionObjective objective(session.candidates,
                                 DiversityIndex::Compute(kb), snapshot,
                                 config.weights);
    session.selected =
        GreedySelect(objective, config.budget, config.greedy).chosen;
  }
  return session;
}

RefitResult Refit(const QuerySession& session, const KnowledgeBase& kb,
                  const Background& background, const EpisodeConfig& config) {
  config.Validate();
  const auto pending = session.PendingFactIds();
  if (!pending.empty()) throw PendingAnnotationsError(pending.size());

  KnowledgeBase augmented = kb;
  std::vector<InferredFact> inferred;
  std::set<NamedTriple> annotated;
  for (auto i : session.selected) {
    const auto triple = session.candidates[i].Project(session.entity);
    annotated.insert(triple);
    const QuantLabel label =
        session.annotations.at(QuerySession::FactId(i));
    if (!IsPositive(label)) continue;
    augmented.Add(triple, label);
    inferred.push_back({triple, label, Provenance::kAnnotation, 0.0});
  }
  for (const auto& c : session.accepted) {
    const auto triple = c.Project(session.entity);
    const QuantLabel label = SiblingLabel(session, c, kb);
    augmented.Add(triple, label);
    inferred.push_back({triple, label, Provenance::kSiblingAgreement, 0.0});
  }

  EmbeddingModel model =
      config.expand_taxonomy
          ? ExpandThenTrain(augmented, background, config.train, config.expand)
                .train.model
          : Train(augmented, background.types, config.train).model;

  for (auto& fact : inferred) {
    auto resolved = model.relations().Find(fact.triple.relation);
    auto s = model.entities().Find(fact.triple.source);
    auto t = model.entities().Find(fact.triple.target);
    if (resolved && s && t) {
      fact.probability =
          HoleScore(model, {EntityId(*s), RelationId(*resolved), EntityId(*t)})
              .probability;
    }
  }
  if (model.entities().Find(session.entity)) {
    PredictOptions options;
    options.entity = session.entity;
    options.schema_filter = true;
    for (const auto& scored :
         PredictNewTriples(model, augmented, background, options).ranked) {
      if (scored.probability < config.report_threshold) break;
      const auto triple = NamesOf(model, scored.triple);
      if (annotated.count(triple)) continue;
      inferred.push_back({triple, QuantLabel::kSome, Provenance::kFactorization,
                          scored.probability});
    }
  }
  std::stable_sort(inferred.begin(), inferred.end(),
                   [](const InferredFact& a, const InferredFact& b) {
                     if (a.probability != b.probability) {
                       return a.probability > b.probability;
                     }
                     return a.triple < b.triple;
                   });
  return {std::move(augmented), std::move(model), std::move(inferred)};
}

nlohmann::json EpisodeReport::ToJson() const {
  return {{"entity", session.entity},
          {"mode", std::string(genkb::ToString(session.mode))},
          {"selection", std::string(genkb::ToString(session.selection))},
          {"budget", session.budget},
          {"queries", queries},
          {"accepted", accepted},
          {"predicted", predicted},
          {"from_annotation", from_annotation},
          {"from_sibling_agreement", from_sibling_agreement},
          {"from_factorization", from_factorization},
          {"total", total}};
}

EpisodeReport RunEpisode(const std::string& entity, const KnowledgeBase& kb,
                         const Background& background,
                         const EmbeddingModel& snapshot,
                         const EpisodeConfig& config, Annotator& annotator) {
  EpisodeReport report;
  report.session = StartSession(entity, kb, background, snapshot, config);
  auto& session = report.session;
  for (auto i : session.selected) {
    const QuantLabel label =
        annotator.Annotate(session.candidates[i].Project(entity));
    session.annotations[QuerySession::FactId(i)] = label;
    if (IsPositive(label)) ++report.from_annotation;
  }
  report.queries = session.selected.size();
  report.accepted = session.accepted.size();
  const auto refit = Refit(session, kb, background, config);
  for (const auto& fact : refit.inferred) {
    if (fact.provenance == Provenance::kAnnotation) continue;
    const bool verified = IsPositive(annotator.Annotate(fact.triple));
    if (fact.provenance == Provenance::kSiblingAgreement) {
      if (verified) ++report.from_sibling_agreement;
    } else {
      ++report.predicted;
      if (verified) ++report.from_factorization;
    }
  }
  report.total = report.from_annotation + report.from_sibling_agreement +
                 report.from_factorization;
  return report;
}

}  // namespace genkb
