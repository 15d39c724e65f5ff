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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "genkb/active/diversity.h"
#include "genkb/active/episode.h"
#include "genkb/active/objective.h"
#include "genkb/active/proposal.h"
#include "genkb/active/session.h"
#include "genkb/embed/model.h"
#include "genkb/embed/trainer.h"
#include "genkb/guidance/schema_check.h"
#include "genkb/synthetic/worlds.h"

namespace genkb {
namespace {

// Parent "p" with children new, s0..s{n-1}; typed so the schema admits
// (animal, r*, thing) triples.
Background FamilyBackground(int siblings) {
  Background bg;
  std::vector<std::pair<std::string, std::string>> edges = {{"new", "p"}};
  bg.types.Add("new", "animal");
  for (int i = 0; i < siblings; ++i) {
    edges.emplace_back("s" + std::to_string(i), "p");
    bg.types.Add("s" + std::to_string(i), "animal");
  }
  for (int i = 0; i < 6; ++i) bg.types.Add("t" + std::to_string(i), "thing");
  bg.taxonomy = Taxonomy::FromEdges(edges);
  return bg;
}

std::string Sib(int i) { return "s" + std::to_string(i); }

TEST(EstimateConditionalTest, CountsActiveSiblings) {
  const Background bg = FamilyBackground(5);
  KnowledgeBase kb;
  kb.Add("s0", "eat", "t0", QuantLabel::kAll);
  kb.Add("s1", "eat", "t0", QuantLabel::kSome);
  kb.Add("s2", "eat", "t0", QuantLabel::kNone);
  kb.Add("s3", "eat", "t1", QuantLabel::kAll);
  kb.Add("t2", "near", "s4", QuantLabel::kAll);
  // Active siblings: s0..s4. Holding (s, eat, t0) positively: s0, s1.
  EXPECT_DOUBLE_EQ(EstimateConditional("new", "eat", "t0", Orientation::kSource,
                                       kb, bg.taxonomy),
                   0.4);
  EXPECT_DOUBLE_EQ(EstimateConditional("new", "eat", "t5", Orientation::kSource,
                                       kb, bg.taxonomy),
                   0.0);
  EXPECT_DOUBLE_EQ(EstimateConditional("new", "near", "t2", Orientation::kTarget,
                                       kb, bg.taxonomy),
                   0.2);
  // Orientation matters: nobody has (s, near, t2).
  EXPECT_DOUBLE_EQ(EstimateConditional("new", "near", "t2", Orientation::kSource,
                                       kb, bg.taxonomy),
                   0.0);
}

TEST(EstimateConditionalTest, UnanimousIsOne) {
  const Background bg = FamilyBackground(5);
  KnowledgeBase kb;
  for (int i = 0; i < 5; ++i) kb.Add(Sib(i), "eat", "t0", QuantLabel::kAll);
  EXPECT_DOUBLE_EQ(EstimateConditional("new", "eat", "t0", Orientation::kSource,
                                       kb, bg.taxonomy),
                   1.0);
}

TEST(EstimateConditionalTest, ColdEntity) {
  const Background bg = FamilyBackground(3);
  KnowledgeBase kb;
  kb.Add("t0", "near", "t1", QuantLabel::kAll);
  EXPECT_THROW(EstimateConditional("new", "eat", "t0", Orientation::kSource, kb,
                                   bg.taxonomy),
               ColdEntityError);
  EXPECT_THROW(EstimateConditional("orphan", "eat", "t0", Orientation::kSource,
                                   kb, bg.taxonomy),
               ColdEntityError);
  EXPECT_THROW(ProposeQueries("new", kb, bg, {}, ProposalMode::kSiblingGuided, 1),
               ColdEntityError);
}

TEST(ProposeQueriesTest, ThresholdRoutingExample) {
  const Background bg = FamilyBackground(10);
  KnowledgeBase kb;
  for (int i = 0; i < 10; ++i) kb.Add(Sib(i), "eat", "t0", QuantLabel::kAll);
  for (int i = 0; i < 5; ++i) kb.Add(Sib(i), "eat", "t1", QuantLabel::kSome);
  kb.Add(Sib(0), "eat", "t2", QuantLabel::kAll);
  const auto proposal =
      ProposeQueries("new", kb, bg, {0.9, 0.2, 0.8}, ProposalMode::kSiblingGuided, 1);
  ASSERT_EQ(proposal.accepted.size(), 1u);
  EXPECT_EQ(proposal.accepted[0].other, "t0");
  EXPECT_DOUBLE_EQ(proposal.accepted[0].p, 1.0);
  ASSERT_EQ(proposal.candidates.size(), 1u);
  EXPECT_EQ(proposal.candidates[0].other, "t1");
  EXPECT_DOUBLE_EQ(proposal.candidates[0].p, 0.5);
  EXPECT_EQ(proposal.siblings.size(), 10u);
}

TEST(ProposeQueriesTest, UnanimousFactsFormM) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Background bg = FamilyBackground(6);
    KnowledgeBase kb;
    // Every sibling carries each property with probability 0 or 1 only.
    std::set<std::pair<std::string, std::string>> unanimous;
    for (const std::string rel : {"eat", "fear"}) {
      for (int t = 0; t < 6; ++t) {
        if (rng() % 2 == 0) continue;
        const std::string target = "t" + std::to_string(t);
        for (int i = 0; i < 6; ++i) kb.Add(Sib(i), rel, target, QuantLabel::kAll);
      }
    }
    // Oracle: scan every (relation, target) for unanimity.
    for (const auto& [t, label] : kb.triples()) {
      const std::string rel = kb.relations().Name(t.relation.value);
      const std::string target = kb.entities().Name(t.target.value);
      bool all = true;
      for (int i = 0; i < 6; ++i) all = all && kb.Contains(NamedTriple{Sib(i), rel, target});
      if (all) unanimous.emplace(rel, target);
    }
    if (kb.empty()) continue;
    const auto proposal =
        ProposeQueries("new", kb, bg, {}, ProposalMode::kSiblingGuided, 1);
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& c : proposal.accepted) {
      EXPECT_EQ(c.orientation, Orientation::kSource);
      got.emplace(c.relation, c.other);
    }
    EXPECT_EQ(got, unanimous);
    EXPECT_TRUE(proposal.candidates.empty());
  }
}

TEST(ProposeQueriesTest, RoutingInvariantsAndOrder) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    synthetic::SiblingWorldConfig config;
    config.seed = seed;
    config.own_per_child = 0;
    auto world = synthetic::MakeSiblingWorld(config);
    // Make trait prevalence uneven by dropping a few sibling facts.
    std::mt19937_64 rng(seed);
    KnowledgeBase kb;
    for (const auto& lt : world.kb.Canonical()) {
      if (rng() % 5 != 0) kb.Add(lt.triple, lt.label);
    }
    Thresholds th{0.85, 0.25, 0.75};
    const auto proposal = ProposeQueries(world.new_entity, kb, world.background,
                                         th, ProposalMode::kSiblingGuided, 1);
    std::set<NamedTriple> seen;
    for (const auto& c : proposal.candidates) {
      EXPECT_GE(c.p, th.tau_low);
      EXPECT_LE(c.p, th.tau_high);
      EXPECT_TRUE(seen.insert(c.Project(world.new_entity)).second);
      EXPECT_TRUE(SchemaConsistent(c.Project(world.new_entity),
                                   world.background.schema,
                                   world.background.types)
                      .consistent);
      EXPECT_DOUBLE_EQ(c.p, EstimateConditional(world.new_entity, c.relation,
                                                c.other, c.orientation, kb,
                                                world.background.taxonomy));
    }
    for (const auto& c : proposal.accepted) {
      EXPECT_GE(c.p, th.kappa_m);
      EXPECT_TRUE(seen.insert(c.Project(world.new_entity)).second);
    }
    for (std::size_t i = 1; i < proposal.candidates.size(); ++i) {
      const auto& a = proposal.candidates[i - 1];
      const auto& b = proposal.candidates[i];
      const double ua = std::abs(a.p - 0.5), ub = std::abs(b.p - 0.5);
      EXPECT_LE(ua, ub);
      if (ua == ub) {
        EXPECT_LT(a.Project(world.new_entity), b.Project(world.new_entity));
      }
    }
  }
}

TEST(ProposeQueriesTest, BaselineModes) {
  synthetic::SiblingWorldConfig config;
  auto world = synthetic::MakeSiblingWorld(config);
  const auto& e = world.new_entity;
  auto random1 = ProposeQueries(e, world.kb, world.background, {},
                                ProposalMode::kRandom, 5);
  auto random2 = ProposeQueries(e, world.kb, world.background, {},
                                ProposalMode::kRandom, 5);
  auto random3 = ProposeQueries(e, world.kb, world.background, {},
                                ProposalMode::kRandom, 6);
  EXPECT_EQ(random1.candidates, random2.candidates);
  EXPECT_NE(random1.candidates, random3.candidates);
  EXPECT_TRUE(random1.accepted.empty());
  const std::size_t ne = world.kb.entities().size();
  const std::size_t nr = world.kb.relations().size();
  // Every (relation, other, orientation) with other != e; e has no facts.
  EXPECT_EQ(random1.candidates.size(), nr * ne * 2);

  auto sc = ProposeQueries(e, world.kb, world.background, {},
                           ProposalMode::kSchemaConsistent, 5);
  EXPECT_TRUE(sc.accepted.empty());
  std::size_t objects = 0;
  for (const auto& name : world.kb.entities().names()) {
    objects += world.background.types.Types(name).count("object");
  }
  EXPECT_EQ(sc.candidates.size(), nr * objects);
  for (const auto& c : sc.candidates) {
    EXPECT_DOUBLE_EQ(c.p, 0.5);
    EXPECT_TRUE(SchemaConsistent(c.Project(e), world.background.schema,
                                 world.background.types)
                    .consistent);
  }
}

TEST(DiversityIndexTest, MatchesDefinitionOnToyKb) {
  KnowledgeBase kb;
  kb.Add("a", "r", "x", QuantLabel::kAll);
  kb.Add("b", "r", "x", QuantLabel::kSome);
  kb.Add("a", "q", "y", QuantLabel::kNone);
  kb.Add("a", "r", "y", QuantLabel::kAll);
  // E = {a, x, b, y}, R = {r, q}.
  const auto index = DiversityIndex::Compute(kb);
  EXPECT_DOUBLE_EQ(index.Relation("r"), (2.0 + 2.0) / 4.0);
  EXPECT_DOUBLE_EQ(index.Relation("q"), (1.0 + 1.0) / 4.0);
  EXPECT_DOUBLE_EQ(index.Entity("x"), (1.0 + 2.0) / 6.0);
  EXPECT_DOUBLE_EQ(index.Entity("y"), (2.0 + 1.0) / 6.0);
  EXPECT_DOUBLE_EQ(index.Entity("a"), 0.0);
  EXPECT_DOUBLE_EQ(index.Entity("missing"), 0.0);
  for (const auto& [_, v] : index.relations()) EXPECT_LE(v, 2.0);
  for (const auto& [_, v] : index.entities()) EXPECT_LE(v, 2.0);
}

// A model over named entities and relations with random Gaussian vectors.
EmbeddingModel RandomModel(int entities, int relations, int dim,
                           std::uint64_t seed) {
  Vocabulary ev, rv;
  for (int i = 0; i < entities; ++i) ev.Intern("e" + std::to_string(i));
  for (int i = 0; i < relations; ++i) rv.Intern("r" + std::to_string(i));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> ed(entities * dim), rd(relations * dim);
  for (auto& x : ed) x = normal(rng);
  for (auto& x : rd) x = normal(rng);
  return EmbeddingModel::FromParts(ev, rv, dim, LossMode::kBinary, seed,
                                   std::move(ed), std::move(rd));
}

struct Instance {
  KnowledgeBase kb;
  EmbeddingModel model;
  std::vector<CandidateFact> candidates;
};

// Random KB over e0..e{ne-1}, r0..r{nr-1} and `n` distinct candidates.
Instance RandomInstance(std::size_t n, std::uint64_t seed, int ne = 12,
                        int nr = 4) {
  std::mt19937_64 rng(seed);
  Instance inst{{}, RandomModel(ne, nr, 6, seed), {}};
  for (int i = 0; i < ne; ++i) inst.kb.InternEntity("e" + std::to_string(i));
  for (int i = 0; i < nr; ++i) inst.kb.InternRelation("r" + std::to_string(i));
  for (int k = 0; k < 40; ++k) {
    inst.kb.Add("e" + std::to_string(rng() % ne), "r" + std::to_string(rng() % nr),
                "e" + std::to_string(rng() % ne), QuantLabel::kAll);
  }
  std::set<std::pair<int, int>> used;
  while (inst.candidates.size() < n) {
    const int r = static_cast<int>(rng() % nr);
    const int e = static_cast<int>(rng() % ne);
    if (!used.emplace(r, e).second) continue;
    inst.candidates.push_back({"r" + std::to_string(r), "e" + std::to_string(e),
                               Orientation::kSource, 0.5});
  }
  return inst;
}

// Second implementation of the objective straight from the formula, over
// names and vectors rather than the class's dense slots.
double ReferenceObjective(const std::vector<CandidateFact>& subset,
                          const KnowledgeBase& kb, const EmbeddingModel& model,
                          const SelectionWeights& w) {
  std::set<std::string> rels, ents;
  for (const auto& c : subset) {
    rels.insert(c.relation);
    ents.insert(c.other);
  }
  const double coverage =
      static_cast<double>(rels.size()) / kb.relations().size() +
      static_cast<double>(ents.size()) / kb.entities().size();
  double diversity = 0.0;
  for (const auto& c : subset) {
    std::set<int> r_sources, r_targets, e_relations, e_sources;
    for (const auto& [t, _] : kb.triples()) {
      if (kb.relations().Name(t.relation.value) == c.relation) {
        r_sources.insert(t.source.value);
        r_targets.insert(t.target.value);
      }
      if (kb.entities().Name(t.target.value) == c.other) {
        e_relations.insert(t.relation.value);
        e_sources.insert(t.source.value);
      }
    }
    diversity +=
        static_cast<double>(r_sources.size() + r_targets.size()) /
            kb.entities().size() +
        static_cast<double>(e_relations.size() + e_sources.size()) /
            (kb.relations().size() + kb.entities().size());
  }
  auto norm = [](ConstSpan a, ConstSpan b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
    return std::sqrt(s);
  };
  double redundancy = 0.0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      redundancy += norm(
          model.relation(RelationId(*model.relations().Find(subset[i].relation)), 0),
          model.relation(RelationId(*model.relations().Find(subset[j].relation)), 0));
      redundancy +=
          norm(model.entity(EntityId(*model.entities().Find(subset[i].other))),
               model.entity(EntityId(*model.entities().Find(subset[j].other))));
    }
  }
  return w.coverage * coverage + w.diversity * diversity -
         w.redundancy * redundancy;
}

TEST(ObjectiveTest, EmptyAndSingleton) {
  auto inst = RandomInstance(5, 1);
  const SelectionWeights w{1.3, 0.7, 0.2};
  const auto index = DiversityIndex::Compute(inst.kb);
  SelectionObjective f(inst.candidates, index, inst.model, w);
  EXPECT_EQ(f.Value({}), 0.0);
  for (std::size_t i = 0; i < inst.candidates.size(); ++i) {
    const auto& c = inst.candidates[i];
    const double expected =
        w.coverage * (1.0 / inst.kb.relations().size() +
                      1.0 / inst.kb.entities().size()) +
        w.diversity * (index.Relation(c.relation) + index.Entity(c.other));
    EXPECT_NEAR(f.Value({i}), expected, 1e-12);
  }
}

TEST(ObjectiveTest, MatchesReferenceOnRandomSubsets) {
  std::mt19937_64 rng(11);
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    auto inst = RandomInstance(12, 100 + trial);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    const SelectionWeights w{u(rng), u(rng), u(rng)};
    SelectionObjective f(inst.candidates, DiversityIndex::Compute(inst.kb),
                         inst.model, w);
    std::vector<std::size_t> order(12);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> subset(order.begin(), order.begin() + 6);
    std::vector<CandidateFact> facts;
    for (auto i : subset) facts.push_back(inst.candidates[i]);
    EXPECT_NEAR(f.Value(subset), ReferenceObjective(facts, inst.kb, inst.model, w),
                1e-10);
  }
}

TEST(ObjectiveTest, MissingEmbeddingThrows) {
  auto inst = RandomInstance(3, 2);
  inst.candidates.push_back({"r0", "stranger", Orientation::kSource, 0.5});
  EXPECT_THROW(SelectionObjective(inst.candidates,
                                  DiversityIndex::Compute(inst.kb), inst.model,
                                  {}),
               NotFoundError);
  EXPECT_THROW(SelectionWeights({1.0, -1.0, 0.0}).Validate(), ConfigError);
}

// Terms of each candidate subset computed from counts, so the coverage
// comparisons are exact.
TEST(ObjectiveTest, TermsAreSubmodular) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    auto inst = RandomInstance(10, 1000 + trial);
    SelectionObjective f(inst.candidates, DiversityIndex::Compute(inst.kb),
                         inst.model, {});
    std::vector<std::size_t> order(10);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t big = 1 + rng() % 8;
    const std::size_t small = rng() % (big + 1);
    std::vector<std::size_t> outer(order.begin(), order.begin() + big);
    std::vector<std::size_t> inner(order.begin(), order.begin() + small);
    const std::size_t l = order[big];
    auto with = [&](std::vector<std::size_t> s) {
      s.push_back(l);
      return s;
    };
    auto counts = [&](const std::vector<std::size_t>& s) {
      std::set<int> rs, es;
      for (auto i : s) {
        rs.insert(f.RelationSlot(i));
        es.insert(f.EntitySlot(i));
      }
      return std::pair<int, int>(rs.size(), es.size());
    };
    const auto [ri1, ei1] = counts(with(inner));
    const auto [ri0, ei0] = counts(inner);
    const auto [ro1, eo1] = counts(with(outer));
    const auto [ro0, eo0] = counts(outer);
    EXPECT_GE(ri1 - ri0, ro1 - ro0);
    EXPECT_GE(ei1 - ei0, eo1 - eo0);
    EXPECT_NEAR(f.Diversity(with(inner)) - f.Diversity(inner),
                f.Diversity(with(outer)) - f.Diversity(outer), 1e-12);
    EXPECT_LE(f.Redundancy(with(inner)) - f.Redundancy(inner),
              f.Redundancy(with(outer)) - f.Redundancy(outer) + 1e-9);
  }
}

TEST(GreedySelectTest, TakesEverythingWithoutRedundancy) {
  auto inst = RandomInstance(7, 3);
  SelectionObjective f(inst.candidates, DiversityIndex::Compute(inst.kb),
                       inst.model, {1.0, 1.0, 0.0});
  auto s = GreedySelect(f, 10);
  std::vector<std::size_t> chosen = s.chosen;
  std::sort(chosen.begin(), chosen.end());
  std::vector<std::size_t> all(7);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_EQ(chosen, all);
  for (double g : s.gains) EXPECT_GT(g, 0.0);
  EXPECT_NEAR(s.value, f.Value(s.chosen), 1e-12);
}

TEST(GreedySelectTest, IncrementalGainsMatchDirectEvaluation) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto inst = RandomInstance(10, 50 + seed);
    SelectionObjective f(inst.candidates, DiversityIndex::Compute(inst.kb),
                         inst.model, {1.0, 1.0, 0.3});
    auto s = GreedySelect(f, 5);
    std::vector<std::size_t> prefix;
    for (std::size_t k = 0; k < s.chosen.size(); ++k) {
      // The pick maximizes the directly evaluated marginal gain.
      const double base = f.Value(prefix);
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (std::find(prefix.begin(), prefix.end(), i) != prefix.end()) continue;
        auto trial = prefix;
        trial.push_back(i);
        EXPECT_LE(f.Value(trial) - base, s.gains[k] + 1e-9);
      }
      prefix.push_back(s.chosen[k]);
      EXPECT_NEAR(f.Value(prefix) - base, s.gains[k], 1e-9);
    }
  }
}

TEST(GreedySelectTest, TiesGoToLexicographicallySmallerCandidate) {
  KnowledgeBase kb;
  kb.InternRelation("r0");
  for (int i = 0; i < 3; ++i) kb.InternEntity("e" + std::to_string(i));
  auto model = RandomModel(3, 1, 4, 1);
  // Identical gains: no facts, so no diversity, and same coverage.
  std::vector<CandidateFact> candidates = {
      {"r0", "e2", Orientation::kSource, 0.5},
      {"r0", "e1", Orientation::kSource, 0.5},
      {"r0", "e0", Orientation::kTarget, 0.5},
  };
  SelectionObjective f(candidates, DiversityIndex::Compute(kb), model,
                       {1.0, 1.0, 0.0});
  auto s = GreedySelect(f, 1);
  ASSERT_EQ(s.chosen.size(), 1u);
  EXPECT_EQ(s.chosen[0], 2u);
}

TEST(GreedySelectTest, EarlyStopIsOptIn) {
  auto inst = RandomInstance(8, 9);
  SelectionObjective f(inst.candidates, DiversityIndex::Compute(inst.kb),
                       inst.model, {0.0, 0.0, 1.0});
  EXPECT_EQ(GreedySelect(f, 5).chosen.size(), 5u);
  // After the first pick every gain is a negative distance sum.
  EXPECT_EQ(GreedySelect(f, 5, {true}).chosen.size(), 0u);
  SelectionObjective g(inst.candidates, DiversityIndex::Compute(inst.kb),
                       inst.model, {1.0, 1.0, 1.0});
  const auto stopped = GreedySelect(g, 8, {true});
  for (double gain : stopped.gains) EXPECT_GT(gain, 0.0);
  EXPECT_THROW(GreedySelect(SelectionObjective({}, DiversityIndex::Compute(inst.kb),
                                               inst.model, {}),
                            3),
               ConfigError);
}

TEST(GreedySelectTest, ApproximationRatioAgainstBruteForce) {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    auto inst = RandomInstance(10, 5000 + trial);
    std::uniform_real_distribution<double> u(0.1, 2.0);
    const double wc = u(rng), wd = u(rng);
    const SelectionWeights w{wc, wd, 0.01 * (wc + wd) * u(rng) / 2.0};
    SelectionObjective f(inst.candidates, DiversityIndex::Compute(inst.kb),
                         inst.model, w);
    // Brute force over all 3-subsets; also confirm F is non-negative and
    // monotone on every chain of this instance up to size 3.
    double best = 0.0;
    bool monotone = true;
    for (std::size_t a = 0; a < 10; ++a) {
      monotone = monotone && f.Value({a}) >= 0.0;
      for (std::size_t b = a + 1; b < 10; ++b) {
        monotone = monotone && f.Value({a, b}) >= f.Value({a}) &&
                   f.Value({a, b}) >= f.Value({b});
        for (std::size_t c = b + 1; c < 10; ++c) {
          const double v = f.Value({a, b, c});
          monotone = monotone && v >= f.Value({a, b}) && v >= f.Value({a, c}) &&
                     v >= f.Value({b, c});
          best = std::max(best, v);
        }
      }
    }
    if (!monotone) continue;
    ++checked;
    const double greedy = f.Value(GreedySelect(f, 3).chosen);
    EXPECT_GE(greedy, (1.0 - 1.0 / std::exp(1.0)) * best) << "trial " << trial;
  }
  EXPECT_GE(checked, 150);
}

TEST(GreedySelectTest, CoverageBeatsTopKOnSiblingSessions) {
  int wins = 0;
  const int seeds = 20;
  for (int seed = 1; seed <= seeds; ++seed) {
    synthetic::SiblingWorldConfig config;
    config.seed = seed;
    auto world = synthetic::MakeSiblingWorld(config);
    TrainConfig train;
    train.dim = 8;
    train.epochs = 20;
    train.seed = seed;
    auto model = Train(world.kb, world.background.types, train).model;
    auto proposal = ProposeQueries(world.new_entity, world.kb, world.background,
                                   {}, ProposalMode::kSiblingGuided, seed);
    SelectionObjective f(proposal.candidates, DiversityIndex::Compute(world.kb),
                         model, {1.0, 1.0, 0.01});
    const std::size_t budget = 4;
    const double greedy = f.Coverage(GreedySelect(f, budget).chosen);
    const double top = f.Coverage(TopK(proposal.candidates.size(), budget));
    if (greedy >= top) ++wins;
  }
  EXPECT_GE(wins, 18);
}

TEST(TopKTest, FirstBudgetIndices) {
  EXPECT_EQ(TopK(5, 3), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(TopK(2, 3), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(TopK(4, 0).empty());
}

EpisodeConfig FastEpisode(std::uint64_t seed) {
  EpisodeConfig config;
  config.budget = 4;
  config.weights.redundancy = 0.01;
  config.train.dim = 8;
  config.train.epochs = 20;
  config.train.negatives = 1;
  config.train.seed = seed;
  config.seed = seed;
  return config;
}

TEST(SessionTest, JsonRoundTripAndFactIds) {
  synthetic::SiblingWorldConfig wc;
  auto world = synthetic::MakeSiblingWorld(wc);
  const auto config = FastEpisode(1);
  auto model = Train(world.kb, world.background.types, config.train).model;
  auto session =
      StartSession(world.new_entity, world.kb, world.background, model, config);
  ASSERT_EQ(session.selected.size(), 4u);
  session.annotations[QuerySession::FactId(session.selected[0])] = QuantLabel::kSome;
  session.Validate();
  EXPECT_EQ(session.model_snapshot, ModelSnapshotId(model));
  EXPECT_EQ(session.model_snapshot.size(), 16u);
  const auto restored = SessionFromJson(nlohmann::json::parse(ToJson(session).dump()));
  EXPECT_EQ(restored, session);
  EXPECT_EQ(session.PendingFactIds().size(), 3u);

  EXPECT_EQ(QuerySession::FactId(7), "q7");
  EXPECT_EQ(session.ParseFactId("q0"), 0u);
  EXPECT_FALSE(session.ParseFactId("q01").has_value());
  EXPECT_FALSE(session.ParseFactId("x1").has_value());
  EXPECT_FALSE(session.ParseFactId("q99999").has_value());
  EXPECT_THROW(SessionFromJson(nlohmann::json::parse(R"({"entity": 3})")),
               ParseError);
}

TEST(SessionTest, ValidateRejectsBrokenInvariants) {
  QuerySession s;
  s.entity = "x";
  s.budget = 1;
  s.candidates = {{"r", "a", Orientation::kSource, 0.5},
                  {"r", "b", Orientation::kSource, 0.5}};
  s.selected = {0};
  s.Validate();
  auto t = s;
  t.selected = {0, 1};
  EXPECT_THROW(t.Validate(), Error);
  t = s;
  t.accepted = {{"r", "a", Orientation::kSource, 0.95}};
  EXPECT_THROW(t.Validate(), Error);
  t = s;
  t.candidates[1].p = 0.95;
  EXPECT_THROW(t.Validate(), Error);
  t = s;
  t.annotations["q1"] = QuantLabel::kAll;
  EXPECT_THROW(t.Validate(), Error);
}

TEST(SessionTest, QuestionRendering) {
  EXPECT_EQ(RenderQuestion({"butterflies", "pollinate", "flower"}),
            "is it true that all butterflies pollinate some flower?");
  EXPECT_EQ(RenderQuestion({"a", "r", "b"}, QuantLabel::kSome),
            "is it true that some a r some b?");
}

TEST(EpisodeTest, ZeroBudgetReportsOnlyAcceptedFacts) {
  synthetic::SiblingWorldConfig wc;
  wc.seed = 2;
  auto world = synthetic::MakeSiblingWorld(wc);
  auto config = FastEpisode(2);
  config.budget = 0;
  auto model = Train(world.kb, world.background.types, config.train).model;
  TruthAnnotator annotator(world.truth);
  auto report = RunEpisode(world.new_entity, world.kb, world.background, model,
                           config, annotator);
  EXPECT_EQ(report.queries, 0u);
  EXPECT_EQ(report.from_annotation, 0u);
  EXPECT_TRUE(report.session.selected.empty());
  // The core block: every sibling holds it, and so does the new entity.
  EXPECT_EQ(report.accepted, static_cast<std::size_t>(wc.core_relations * wc.group_size));
  EXPECT_EQ(report.from_sibling_agreement, report.accepted);
  EXPECT_EQ(report.total, report.from_sibling_agreement + report.from_factorization);
}

TEST(EpisodeTest, RefitRequiresAllAnnotations) {
  synthetic::SiblingWorldConfig wc;
  auto world = synthetic::MakeSiblingWorld(wc);
  const auto config = FastEpisode(1);
  auto model = Train(world.kb, world.background.types, config.train).model;
  auto session =
      StartSession(world.new_entity, world.kb, world.background, model, config);
  session.annotations[QuerySession::FactId(session.selected[0])] = QuantLabel::kAll;
  try {
    Refit(session, world.kb, world.background, config);
    FAIL() << "expected PendingAnnotationsError";
  } catch (const PendingAnnotationsError& e) {
    EXPECT_EQ(e.pending(), 3u);
  }
  for (auto i : session.selected) {
    session.annotations[QuerySession::FactId(i)] =
        world.truth.count(session.candidates[i].Project(world.new_entity))
            ? QuantLabel::kAll
            : QuantLabel::kNone;
  }
  auto refit = Refit(session, world.kb, world.background, config);
  std::size_t accepted = 0, annotated = 0;
  for (const auto& fact : refit.inferred) {
    EXPECT_TRUE(fact.triple.source == world.new_entity ||
                fact.triple.target == world.new_entity);
    EXPECT_TRUE(SchemaConsistent(fact.triple, world.background.schema,
                                 world.background.types)
                    .consistent);
    accepted += fact.provenance == Provenance::kSiblingAgreement;
    annotated += fact.provenance == Provenance::kAnnotation;
    if (fact.provenance == Provenance::kFactorization) {
      EXPECT_GE(fact.probability, config.report_threshold);
      EXPECT_FALSE(refit.augmented.Contains(fact.triple));
    } else {
      EXPECT_TRUE(refit.augmented.Contains(fact.triple));
    }
  }
  EXPECT_EQ(accepted, session.accepted.size());
  std::size_t true_annotations = 0;
  for (const auto& [_, label] : session.annotations) true_annotations += IsPositive(label);
  EXPECT_EQ(annotated, true_annotations);
  for (std::size_t i = 1; i < refit.inferred.size(); ++i) {
    EXPECT_GE(refit.inferred[i - 1].probability, refit.inferred[i].probability);
  }
}

}  // namespace
}  // namespace genkb
