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

#ifndef GENKB_EMBED_MODEL_H_
#define GENKB_EMBED_MODEL_H_

#include <cstdint>
#include <span>
#include <vector>

#include "genkb/embed/correlation.h"
#include "genkb/kb/knowledge_base.h"
#include "genkb/kb/vocabulary.h"

namespace genkb {

enum class LossMode { kBinary, kMulticlass };

// Class heads of the three-way model, in ClassIndex order minus one.
inline constexpr int kHeadAll = 0;
inline constexpr int kHeadSome = 1;
inline constexpr int kHeadNone = 2;

// Entity and relation vectors of a holographic embedding model. Binary
// models keep one vector per relation; three-way models keep one per class
// head.
class EmbeddingModel {
 public:
  EmbeddingModel() = default;

  // Draws every coordinate from N(0, 1/sqrt(dim)) with a generator seeded by
  // `seed`.
  static EmbeddingModel Initialize(const Vocabulary& entities,
                                   const Vocabulary& relations,
                                   std::size_t dim, LossMode mode,
                                   std::uint64_t seed);

  // Assembles a model from stored parts; validates sizes.
  static EmbeddingModel FromParts(Vocabulary entities, Vocabulary relations,
                                  std::size_t dim, LossMode mode,
                                  std::uint64_t seed,
                                  std::vector<double> entity_data,
                                  std::vector<double> relation_data);

  std::size_t dim() const { return dim_; }
  LossMode mode() const { return mode_; }
  int heads() const { return mode_ == LossMode::kBinary ? 1 : 3; }
  std::uint64_t seed() const { return seed_; }
  const Vocabulary& entities() const { return entities_; }
  const Vocabulary& relations() const { return relations_; }

  std::span<const double> entity(EntityId e) const;
  std::span<double> entity(EntityId e);
  std::span<const double> relation(RelationId r, int head = 0) const;
  std::span<double> relation(RelationId r, int head = 0);

  const std::vector<double>& entity_data() const { return entity_data_; }
  const std::vector<double>& relation_data() const { return relation_data_; }
  std::vector<double>& entity_data() { return entity_data_; }
  std::vector<double>& relation_data() { return relation_data_; }

  // Throws Error when the vocabularies differ from the knowledge base's.
  void CheckCompatible(const KnowledgeBase& kb) const;

  bool AllFinite() const;
  bool operator==(const EmbeddingModel& other) const = default;

 private:
  std::size_t dim_ = 0;
  LossMode mode_ = LossMode::kBinary;
  std::uint64_t seed_ = 0;
  Vocabulary entities_;
  Vocabulary relations_;
  std::vector<double> entity_data_;
  std::vector<double> relation_data_;
};

struct ScoredTriple {
  Triple triple;
  double score = 0.0;
  double probability = 0.5;
};

double Sigmoid(double x);

// h_r . (h_s o h_t) for one relation head.
double HeadScore(const EmbeddingModel& model, const Triple& triple,
                 int head = 0);

// Binary models: score = f, probability = sigmoid(f). Three-way models:
// score = logit(P(All) + P(Some)) under the softmax over heads, so that
// sigmoid(score) is the probability that the triple holds for some member.
ScoredTriple HoleScore(const EmbeddingModel& model, const Triple& triple);

}  // namespace genkb

#endif  // GENKB_EMBED_MODEL_H_
