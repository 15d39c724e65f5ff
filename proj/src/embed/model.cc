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

#include "genkb/embed/model.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

namespace genkb {

EmbeddingModel EmbeddingModel::Initialize(const Vocabulary& entities,
                                          const Vocabulary& relations,
                                          std::size_t dim, LossMode mode,
                                          std::uint64_t seed) {
  if (dim == 0) throw ConfigError("embedding dimension must be >= 1");
  EmbeddingModel model;
  model.dim_ = dim;
  model.mode_ = mode;
  model.seed_ = seed;
  model.entities_ = entities;
  model.relations_ = relations;
  model.entity_data_.resize(entities.size() * dim);
  model.relation_data_.resize(relations.size() * model.heads() * dim);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(
      0.0, 1.0 / std::sqrt(static_cast<double>(dim)));
  for (double& x : model.entity_data_) x = normal(rng);
  for (double& x : model.relation_data_) x = normal(rng);
  return model;
}

EmbeddingModel EmbeddingModel::FromParts(Vocabulary entities,
                                         Vocabulary relations, std::size_t dim,
                                         LossMode mode, std::uint64_t seed,
                                         std::vector<double> entity_data,
                                         std::vector<double> relation_data) {
  if (dim == 0) throw ConfigError("embedding dimension must be >= 1");
  EmbeddingModel model;
  model.dim_ = dim;
  model.mode_ = mode;
  model.seed_ = seed;
  if (entity_data.size() != entities.size() * dim ||
      relation_data.size() != relations.size() * model.heads() * dim) {
    throw Error("embedding data size does not match the vocabularies");
  }
  model.entities_ = std::move(entities);
  model.relations_ = std::move(relations);
  model.entity_data_ = std::move(entity_data);
  model.relation_data_ = std::move(relation_data);
  return model;
}

std::span<const double> EmbeddingModel::entity(EntityId e) const {
  if (e.value < 0 || e.index() >= entities_.size()) {
    throw NotFoundError("unknown entity id " + std::to_string(e.value));
  }
  return {entity_data_.data() + e.index() * dim_, dim_};
}

std::span<double> EmbeddingModel::entity(EntityId e) {
  auto s = std::as_const(*this).entity(e);
  return {const_cast<double*>(s.data()), s.size()};
}

std::span<const double> EmbeddingModel::relation(RelationId r,
                                                 int head) const {
  if (r.value < 0 || r.index() >= relations_.size()) {
    throw NotFoundError("unknown relation id " + std::to_string(r.value));
  }
  if (head < 0 || head >= heads()) {
    throw NotFoundError("relation head " + std::to_string(head) +
                        " out of range");
  }
  const std::size_t offset = (r.index() * heads() + head) * dim_;
  return {relation_data_.data() + offset, dim_};
}

std::span<double> EmbeddingModel::relation(RelationId r, int head) {
  auto s = std::as_const(*this).relation(r, head);
  return {const_cast<double*>(s.data()), s.size()};
}

void EmbeddingModel::CheckCompatible(const KnowledgeBase& kb) const {
  if (entities_.Fingerprint() != kb.entities().Fingerprint() ||
      relations_.Fingerprint() != kb.relations().Fingerprint()) {
    throw Error("model vocabulary does not match the knowledge base");
  }
}

bool EmbeddingModel::AllFinite() const {
  auto finite = [](double x) { return std::isfinite(x); };
  return std::all_of(entity_data_.begin(), entity_data_.end(), finite) &&
         std::all_of(relation_data_.begin(), relation_data_.end(), finite);
}

double Sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double HeadScore(const EmbeddingModel& model, const Triple& triple, int head) {
  const auto r = model.relation(triple.relation, head);
  const auto s = model.entity(triple.source);
  const auto t = model.entity(triple.target);
  // r . (s o t) = sum_k r[k] sum_i s[i] t[i+k]; no temporary needed.
  const std::size_t d = model.dim();
  double sum = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    double c = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      std::size_t j = i + k;
      if (j >= d) j -= d;
      c += s[i] * t[j];
    }
    sum += r[k] * c;
  }
  return sum;
}

ScoredTriple HoleScore(const EmbeddingModel& model, const Triple& triple) {
  ScoredTriple out;
  out.triple = triple;
  if (model.mode() == LossMode::kBinary) {
    out.score = HeadScore(model, triple, 0);
  } else {
    const double fa = HeadScore(model, triple, kHeadAll);
    const double fs = HeadScore(model, triple, kHeadSome);
    const double fn = HeadScore(model, triple, kHeadNone);
    const double m = std::max(fa, fs);
    out.score = m + std::log(std::exp(fa - m) + std::exp(fs - m)) - fn;
  }
  out.probability = Sigmoid(out.score);
  return out;
}

}  // namespace genkb
