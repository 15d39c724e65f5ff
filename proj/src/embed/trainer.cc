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

#include "genkb/embed/trainer.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>

#include "genkb/embed/losses.h"
#include "genkb/embed/negative_sampler.h"

namespace genkb {
namespace {

void Correlate(FftCorrelator* fft, ConstSpan a, ConstSpan b,
               std::span<double> out) {
  if (fft) {
    fft->Correlate(a, b, out);
  } else {
    CircularCorrelationInto(a, b, out);
  }
}

void Convolve(FftCorrelator* fft, ConstSpan a, ConstSpan b,
              std::span<double> out) {
  if (fft) {
    fft->Convolve(a, b, out);
  } else {
    CircularConvolutionInto(a, b, out);
  }
}

double SquaredNorm(ConstSpan v) { return Dot(v, v); }

void Axpy(double alpha, ConstSpan x, Vec& y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

class AdaptiveStep {
 public:
  AdaptiveStep(const EmbeddingModel& model, const TrainConfig& config)
      : config_(config),
        entity_acc_(model.entity_data().size(), 0.0),
        relation_acc_(model.relation_data().size(), 0.0) {}

  void Apply(std::span<double> param, std::span<double> acc, const Vec& grad) {
    const double lr = config_.learning_rate;
    for (std::size_t i = 0; i < param.size(); ++i) {
      if (config_.adagrad) {
        acc[i] += grad[i] * grad[i];
        if (acc[i] > 0.0) param[i] -= lr * grad[i] / std::sqrt(acc[i]);
      } else {
        param[i] -= lr * grad[i];
      }
    }
  }

  std::span<double> EntityAcc(EntityId e, std::size_t dim) {
    return {entity_acc_.data() + e.index() * dim, dim};
  }
  std::span<double> RelationAcc(RelationId r, int head, int heads,
                                std::size_t dim) {
    return {relation_acc_.data() + (r.index() * heads + head) * dim, dim};
  }

 private:
  const TrainConfig& config_;
  std::vector<double> entity_acc_;
  std::vector<double> relation_acc_;
};

}  // namespace

void TrainConfig::Validate() const {
  if (dim < 1) throw ConfigError("dim must be >= 1");
  if (epochs < 1) throw ConfigError("epochs must be >= 1");
  if (!(learning_rate >= 0.0) || !std::isfinite(learning_rate)) {
    throw ConfigError("learning rate must be finite and non-negative");
  }
  if (negatives < 1) throw ConfigError("negatives must be >= 1");
  if (!(same_type_fraction >= 0.0 && same_type_fraction <= 1.0)) {
    throw ConfigError("same-type fraction must lie in [0, 1]");
  }
  if (!(l2 >= 0.0)) throw ConfigError("l2 weight must be >= 0");
}

ExampleGradient ComputeExampleGradient(const EmbeddingModel& model,
                                       const Triple& triple, QuantLabel label,
                                       double weight, double l2,
                                       FftCorrelator* fft) {
  const std::size_t d = model.dim();
  const int heads = model.heads();
  const auto s = model.entity(triple.source);
  const auto t = model.entity(triple.target);

  Vec st(d);
  Correlate(fft, s, t, st);
  std::array<double, 3> scores{};
  for (int h = 0; h < heads; ++h) {
    scores[h] = Dot(model.relation(triple.relation, h), st);
  }

  ExampleGradient out;
  out.relation.assign(heads, Vec(d, 0.0));
  out.source.assign(d, 0.0);
  out.target.assign(d, 0.0);

  std::array<double, 3> dscore{};
  if (model.mode() == LossMode::kBinary) {
    const int y = BinaryTarget(label);
    out.loss = weight * BinaryLoss(scores[0], y);
    dscore[0] = weight * BinaryLossGrad(scores[0], y);
  } else {
    const int y = ClassIndex(label);
    out.loss = weight * MulticlassLoss(scores, y);
    dscore = MulticlassLossGrad(scores, y);
    for (double& g : dscore) g *= weight;
  }

  Vec rt(d), rs(d);
  for (int h = 0; h < heads; ++h) {
    const auto r = model.relation(triple.relation, h);
    Axpy(dscore[h], st, out.relation[h]);
    Correlate(fft, r, t, rt);
    Convolve(fft, r, s, rs);
    Axpy(dscore[h], rt, out.source);
    Axpy(dscore[h], rs, out.target);
  }

  if (l2 > 0.0) {
    for (int h = 0; h < heads; ++h) {
      const auto r = model.relation(triple.relation, h);
      out.loss += 0.5 * l2 * SquaredNorm(r);
      Axpy(l2, r, out.relation[h]);
    }
    out.loss += 0.5 * l2 * (SquaredNorm(s) + SquaredNorm(t));
    Axpy(l2, s, out.source);
    Axpy(l2, t, out.target);
  }
  return out;
}

TrainResult Train(const KnowledgeBase& kb, const TypeMap& types,
                  const TrainConfig& config) {
  std::vector<WeightedTriple> examples;
  examples.reserve(kb.size());
  for (const auto& [triple, label] : kb.triples()) {
    examples.push_back({triple, label, 1.0});
  }
  return TrainWeighted(kb, examples, types, config);
}

TrainResult TrainWeighted(const KnowledgeBase& known,
                          const std::vector<WeightedTriple>& examples,
                          const TypeMap& types, const TrainConfig& config) {
  config.Validate();
  if (examples.empty()) throw ConfigError("training set is empty");

  TrainResult result;
  result.model = EmbeddingModel::Initialize(known.entities(), known.relations(),
                                            config.dim, config.loss,
                                            config.seed);
  EmbeddingModel& model = result.model;
  const std::size_t d = config.dim;
  const int heads = model.heads();

  NegativeSampler sampler(known, types,
                          {config.negatives, config.same_type_fraction,
                           config.corrupt_target, 100});
  std::unique_ptr<FftCorrelator> fft;
  if (config.fft) fft = std::make_unique<FftCorrelator>(d);
  AdaptiveStep step(model, config);
  // Separate stream from initialization so changing the schedule does not
  // change the starting point.
  std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);

  std::vector<std::size_t> order(examples.size());
  std::iota(order.begin(), order.end(), 0);

  auto update = [&](const Triple& triple, QuantLabel label, double weight,
                    int epoch) -> double {
    ExampleGradient g = ComputeExampleGradient(model, triple, label, weight,
                                               config.l2, fft.get());
    if (!std::isfinite(g.loss)) {
      std::ostringstream msg;
      msg << "non-finite loss in epoch " << epoch << " at "
          << known.Names(triple) << " (label " << ToString(label)
          << ", weight " << weight << ")";
      throw TrainingError(msg.str());
    }
    for (int h = 0; h < heads; ++h) {
      step.Apply(model.relation(triple.relation, h),
                 step.RelationAcc(triple.relation, h, heads, d),
                 g.relation[h]);
    }
    if (triple.source == triple.target) {
      Axpy(1.0, g.target, g.source);
      step.Apply(model.entity(triple.source), step.EntityAcc(triple.source, d),
                 g.source);
    } else {
      step.Apply(model.entity(triple.source), step.EntityAcc(triple.source, d),
                 g.source);
      step.Apply(model.entity(triple.target), step.EntityAcc(triple.target, d),
                 g.target);
    }
    return g.loss;
  };

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    double loss_sum = 0.0;
    double weight_sum = 0.0;
    for (std::size_t idx : order) {
      const WeightedTriple& ex = examples[idx];
      loss_sum += update(ex.triple, ex.label, ex.weight, epoch);
      weight_sum += ex.weight;
      if (!IsPositive(ex.label)) continue;
      for (const Triple& neg : sampler.Sample(ex.triple, rng)) {
        loss_sum += update(neg, QuantLabel::kNone, ex.weight, epoch);
        weight_sum += ex.weight;
      }
    }
    result.epoch_losses.push_back(weight_sum > 0 ? loss_sum / weight_sum : 0.0);
  }
  result.final_loss = result.epoch_losses.back();
  result.exhausted_negatives = sampler.exhausted();
  return result;
}

}  // namespace genkb
