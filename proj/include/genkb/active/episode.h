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

#ifndef GENKB_ACTIVE_EPISODE_H_
#define GENKB_ACTIVE_EPISODE_H_

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "genkb/active/session.h"
#include "genkb/embed/trainer.h"
#include "genkb/guidance/expand_train.h"
#include "genkb/kb/background.h"

namespace genkb {

// Source of true labels for proposed triples.
class Annotator {
 public:
  virtual ~Annotator() = default;
  virtual QuantLabel Annotate(const NamedTriple& triple) = 0;
};

// Looks labels up in a ground-truth table; absent triples are None.
class TruthAnnotator : public Annotator {
 public:
  explicit TruthAnnotator(std::map<NamedTriple, QuantLabel> truth)
      : truth_(std::move(truth)) {}
  QuantLabel Annotate(const NamedTriple& triple) override;
  std::size_t calls() const { return calls_; }

 private:
  std::map<NamedTriple, QuantLabel> truth_;
  std::size_t calls_ = 0;
};

struct EpisodeConfig {
  ProposalMode mode = ProposalMode::kSiblingGuided;
  SelectionMethod selection = SelectionMethod::kSubmodular;
  std::size_t budget = 10;
  Thresholds thresholds;
  SelectionWeights weights;
  GreedyOptions greedy;
  TrainConfig train;
  ExpandConfig expand;
  // Retrain with taxonomy expansion; plain training otherwise.
  bool expand_taxonomy = true;
  double report_threshold = 0.5;
  std::uint64_t seed = 1;

  void Validate() const;
  bool operator==(const EpisodeConfig&) const = default;
};

// Refit requested while selected facts still lack a label.
class PendingAnnotationsError : public Error {
 public:
  explicit PendingAnnotationsError(std::size_t pending)
      : Error(std::to_string(pending) + " selected annotations pending"),
        pending_(pending) {}
  std::size_t pending() const { return pending_; }

 private:
  std::size_t pending_;
};

enum class Provenance { kAnnotation, kSiblingAgreement, kFactorization };
std::string_view ToString(Provenance provenance);

struct InferredFact {
  NamedTriple triple;
  QuantLabel label = QuantLabel::kSome;
  Provenance provenance = Provenance::kFactorization;
  double probability = 0.0;  // under the refit model; 0 if unscored

  bool operator==(const InferredFact&) const = default;
};

struct RefitResult {
  KnowledgeBase augmented;  // kb plus annotated-true facts plus M
  EmbeddingModel model;
  // Probability-descending, ties in triple order.
  std::vector<InferredFact> inferred;
};

// Proposes candidates and selects up to `budget` of them. `snapshot` is the
// pre-episode model supplying embeddings for the redundancy term.
QuerySession StartSession(const std::string& entity, const KnowledgeBase& kb,
                          const Background& background,
                          const EmbeddingModel& snapshot,
                          const EpisodeConfig& config);

// Adds annotated-true facts and M to `kb`, retrains from scratch, and
// scores every schema-consistent unknown triple involving the entity.
// Throws PendingAnnotationsError while selected facts lack a label.
RefitResult Refit(const QuerySession& session, const KnowledgeBase& kb,
                  const Background& background, const EpisodeConfig& config);

struct EpisodeReport {
  std::size_t from_annotation = 0;
  std::size_t from_sibling_agreement = 0;
  std::size_t from_factorization = 0;
  std::size_t total = 0;
  std::size_t queries = 0;
  std::size_t accepted = 0;
  std::size_t predicted = 0;  // factorization facts before verification
  QuerySession session;

  nlohmann::json ToJson() const;
};

// StartSession, annotate every selected fact, Refit, then verify M and the
// factorization facts with `annotator`.
EpisodeReport RunEpisode(const std::string& entity, const KnowledgeBase& kb,
                         const Background& background,
                         const EmbeddingModel& snapshot,
                         const EpisodeConfig& config, Annotator& annotator);

}  // namespace genkb

#endif  // GENKB_ACTIVE_EPISODE_H_
