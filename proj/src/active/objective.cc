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

#include "genkb/active/objective.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>
#include <map>
#include <set>

namespace genkb {
namespace {

double Distance(const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    sum += d * d;
  }
  return std::sqrt(sum);
}

int LocalId(std::map<std::string, int>& ids, const std::string& name) {
  return ids.try_emplace(name, static_cast<int>(ids.size())).first->second;
}

}  // namespace

void SelectionWeights::Validate() const {
  for (double w : {coverage, diversity, redundancy}) {
    if (!std::isfinite(w) || w < 0.0) {
      throw ConfigError("selection weights must be finite and non-negative");
    }
  }
}

SelectionObjective::SelectionObjective(
    const std::vector<CandidateFact>& candidates,
    const DiversityIndex& diversity, const EmbeddingModel& model,
    const SelectionWeights& weights)
    : weights_(weights) {
  weights.Validate();
  if (diversity.num_relations() > 0) {
    inv_relations_ = 1.0 / static_cast<double>(diversity.num_relations());
  }
  if (diversity.num_entities() > 0) {
    inv_entities_ = 1.0 / static_cast<double>(diversity.num_entities());
  }
  std::map<std::string, int> relation_ids, entity_ids;
  for (const auto& c : candidates) {
    const int r = LocalId(relation_ids, c.relation);
    const int e = LocalId(entity_ids, c.other);
    relation_.push_back(r);
    entity_.push_back(e);
    vr_.push_back(diversity.Relation(c.relation));
    ve_.push_back(diversity.Entity(c.other));
    if (static_cast<std::size_t>(r) == relation_vec_.size()) {
      auto id = model.relations().Find(c.relation);
      if (!id) throw NotFoundError("no embedding for relation " + c.relation);
      std::vector<double> v;
      for (int h = 0; h < model.heads(); ++h) {
        auto span = model.relation(RelationId(*id), h);
        v.insert(v.end(), span.begin(), span.end());
      }
      relation_vec_.push_back(std::move(v));
    }
    if (static_cast<std::size_t>(e) == entity_vec_.size()) {
      auto id = model.entities().Find(c.other);
      if (!id) throw NotFoundError("no embedding for entity " + c.other);
      auto span = model.entity(EntityId(*id));
      entity_vec_.emplace_back(span.begin(), span.end());
    }
  }
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = candidates[a];
    const auto& y = candidates[b];
    return std::tie(x.relation, x.other, x.orientation) <
           std::tie(y.relation, y.other, y.orientation);
  });
  lex_rank_.resize(candidates.size());
  for (std::size_t k = 0; k < order.size(); ++k) lex_rank_[order[k]] = k;
}

double SelectionObjective::Coverage(
    const std::vector<std::size_t>& subset) const {
  std::set<int> rs, es;
  for (auto i : subset) {
    rs.insert(relation_[i]);
    es.insert(entity_[i]);
  }
  return static_cast<double>(rs.size()) * inv_relations_ +
         static_cast<double>(es.size()) * inv_entities_;
}

double SelectionObjective::Diversity(
    const std::vector<std::size_t>& subset) const {
  double sum = 0.0;
  for (auto i : subset) sum += vr_[i] + ve_[i];
  return sum;
}

double SelectionObjective::PairDistance(std::size_t i, std::size_t j) const {
  return Distance(relation_vec_[relation_[i]], relation_vec_[relation_[j]]) +
         Distance(entity_vec_[entity_[i]], entity_vec_[entity_[j]]);
}

double SelectionObjective::Redundancy(
    const std::vector<std::size_t>& subset) const {
  double sum = 0.0;
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      sum += PairDistance(subset[a], subset[b]);
    }
  }
  return sum;
}

double SelectionObjective::Value(const std::vector<std::size_t>& subset) const {
  return weights_.coverage * Coverage(subset) +
         weights_.diversity * Diversity(subset) -
         weights_.redundancy * Redundancy(subset);
}

Selection GreedySelect(const SelectionObjective& objective,
                       std::size_t budget, const GreedyOptions& options) {
  const std::size_t n = objective.size();
  if (n == 0) throw ConfigError("greedy selection needs a non-empty candidate list");
  const auto& w = objective.weights();
  std::set<int> covered_r, covered_e;
  std::vector<double> pair_sum(n, 0.0);
  std::vector<bool> taken(n, false);
  Selection out;
  while (out.chosen.size() < std::min(budget, n)) {
    std::size_t best = n;
    double best_gain = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      double cov = 0.0;
      if (!covered_r.count(objective.RelationSlot(i))) cov += objective.inv_relations();
      if (!covered_e.count(objective.EntitySlot(i))) cov += objective.inv_entities();
      const double gain = w.coverage * cov +
                          w.diversity * (objective.Vr(i) + objective.Ve(i)) -
                          w.redundancy * pair_sum[i];
      if (best == n || gain > best_gain ||
          (gain == best_gain && objective.LexRank(i) < objective.LexRank(best))) {
        best = i;
        best_gain = gain;
      }
    }
    if (best == n) break;
    if (options.stop_on_nonpositive_gain && best_gain <= 0.0) break;
    taken[best] = true;
    covered_r.insert(objective.RelationSlot(best));
    covered_e.insert(objective.EntitySlot(best));
    for (std::size_t i = 0; i < n; ++i) {
      if (!taken[i]) pair_sum[i] += objective.PairDistance(i, best);
    }
    out.chosen.push_back(best);
    out.gains.push_back(best_gain);
    out.value += best_gain;
  }
  return out;
}

std::vector<std::size_t> TopK(std::size_t num_candidates, std::size_t budget) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < std::min(num_candidates, budget); ++i) {
    out.push_back(i);
  }
  return out;
}

}  // namespace genkb
