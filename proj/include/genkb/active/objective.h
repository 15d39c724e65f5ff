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

#ifndef GENKB_ACTIVE_OBJECTIVE_H_
#define GENKB_ACTIVE_OBJECTIVE_H_

#include <cstddef>
#include <string>
#include <vector>

#include "genkb/active/diversity.h"
#include "genkb/active/proposal.h"
#include "genkb/embed/model.h"

namespace genkb {

struct SelectionWeights {
  double coverage = 1.0;
  double diversity = 1.0;
  double redundancy = 0.1;

  // All weights non-negative and finite.
  void Validate() const;
  bool operator==(const SelectionWeights&) const = default;
};

// Selection objective over subsets of a fixed candidate list:
//   F(S) = w_C * C(S) + w_D * D(S) - w_R * R(S)
//   C(S) = |relations of S| / |R| + |other entities of S| / |E|
//   D(S) = sum over S of V_r + V_e
//   R(S) = sum over unordered pairs of S of
//          ||h_r1 - h_r2|| + ||h_e1 - h_e2||
// Embeddings come from `model` (all heads concatenated for relations);
// every candidate name must be in the model's vocabularies.
class SelectionObjective {
 public:
  SelectionObjective(const std::vector<CandidateFact>& candidates,
                     const DiversityIndex& diversity,
                     const EmbeddingModel& model,
                     const SelectionWeights& weights);

  std::size_t size() const { return relation_.size(); }
  const SelectionWeights& weights() const { return weights_; }

  double Coverage(const std::vector<std::size_t>& subset) const;
  double Diversity(const std::vector<std::size_t>& subset) const;
  double Redundancy(const std::vector<std::size_t>& subset) const;
  double Value(const std::vector<std::size_t>& subset) const;

  // ||h_r(i) - h_r(j)|| + ||h_e(i) - h_e(j)||.
  double PairDistance(std::size_t i, std::size_t j) const;
  double Vr(std::size_t i) const { return vr_[i]; }
  double Ve(std::size_t i) const { return ve_[i]; }
  // Dense ids of the candidate's relation and other entity, local to the
  // candidate list.
  int RelationSlot(std::size_t i) const { return relation_[i]; }
  int EntitySlot(std::size_t i) const { return entity_[i]; }
  double inv_relations() const { return inv_relations_; }
  double inv_entities() const { return inv_entities_; }
  // Position of candidate i in (relation, other, orientation) order.
  std::size_t LexRank(std::size_t i) const { return lex_rank_[i]; }

 private:

  SelectionWeights weights_;
  double inv_relations_ = 0.0;
  double inv_entities_ = 0.0;
  std::vector<int> relation_;  // dense ids local to the candidate list
  std::vector<int> entity_;
  std::vector<double> vr_, ve_;
  std::vector<std::size_t> lex_rank_;
  std::vector<std::vector<double>> relation_vec_;  // by local relation id
  std::vector<std::vector<double>> entity_vec_;    // by local entity id
};

struct GreedyOptions {
  // Stop as soon as the best marginal gain is not positive.
  bool stop_on_nonpositive_gain = false;
  bool operator==(const GreedyOptions&) const = default;
};

struct Selection {
  std::vector<std::size_t> chosen;  // indices into the candidate list
  std::vector<double> gains;        // marginal gain of each pick
  double value = 0.0;
};

// Picks up to `budget` candidates by largest marginal gain; ties go to the
// lexicographically smaller candidate. Gains are maintained incrementally.
// Throws ConfigError on an empty candidate list.
Selection GreedySelect(const SelectionObjective& objective,
                       std::size_t budget, const GreedyOptions& options = {});

// The first `budget` candidates of L.
std::vector<std::size_t> TopK(std::size_t num_candidates, std::size_t budget);

}  // namespace genkb

#endif  // GENKB_ACTIVE_OBJECTIVE_H_
