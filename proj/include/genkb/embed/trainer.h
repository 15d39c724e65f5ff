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

#ifndef GENKB_EMBED_TRAINER_H_
#define GENKB_EMBED_TRAINER_H_

#include <cstdint>
#include <vector>

#include "genkb/embed/correlation.h"
#include "genkb/embed/model.h"
#include "genkb/kb/background.h"
#include "genkb/kb/knowledge_base.h"

namespace genkb {

struct TrainConfig {
  std::size_t dim = 64;
  int epochs = 100;
  double learning_rate = 0.1;
  bool adagrad = true;
  std::size_t negatives = 1;
  double same_type_fraction = 0.0;
  bool corrupt_target = true;
  double l2 = 0.0;
  std::uint64_t seed = 1;
  LossMode loss = LossMode::kBinary;
  bool fft = false;

  // Throws ConfigError on out-of-range fields.
  void Validate() const;
  bool operator==(const TrainConfig&) const = default;
};

struct WeightedTriple {
  Triple triple;
  QuantLabel label = QuantLabel::kAll;
  double weight = 1.0;
};

struct TrainResult {
  EmbeddingModel model;
  double final_loss = 0.0;
  std::vector<double> epoch_losses;
  std::size_t exhausted_negatives = 0;
};

class TrainingError : public Error {
 public:
  using Error::Error;
};

// Loss of one labeled triple and its gradient with respect to every vector
// involved. Source and target gradients are kept apart even when both slots
// hold the same entity.
struct ExampleGradient {
  double loss = 0.0;
  std::vector<Vec> relation;  // one per head
  Vec source;
  Vec target;
};

// Binary models use target BinaryTarget(label); three-way models use
// ClassIndex(label). `l2` adds 0.5 * l2 * |theta|^2 for every vector touched.
ExampleGradient ComputeExampleGradient(const EmbeddingModel& model,
                                       const Triple& triple, QuantLabel label,
                                       double weight = 1.0, double l2 = 0.0,
                                       FftCorrelator* fft = nullptr);

// Trains on every triple of `kb` with weight 1. Negatives are rejected when
// they appear in `kb`.
TrainResult Train(const KnowledgeBase& kb, const TypeMap& types,
                  const TrainConfig& config);

// Model vocabularies come from `known`, which also filters negatives.
// Example ids must resolve in `known`.
TrainResult TrainWeighted(const KnowledgeBase& known,
                          const std::vector<WeightedTriple>& examples,
                          const TypeMap& types, const TrainConfig& config);

}  // namespace genkb

#endif  // GENKB_EMBED_TRAINER_H_
