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

#ifndef GENKB_ACTIVE_DIVERSITY_H_
#define GENKB_ACTIVE_DIVERSITY_H_

#include <map>
#include <string>

#include "genkb/kb/knowledge_base.h"

namespace genkb {

// Per-relation and per-entity diversity, fixed by the KB alone.
//   V_r = (|sources of r| + |targets of r|) / |E|
//   V_e = (|relations with e as target| + |sources co-occurring with e as
//          target|) / (|R| + |E|)
// |E| and |R| are the vocabulary sizes; every triple counts, whatever its
// label.
class DiversityIndex {
 public:
  static DiversityIndex Compute(const KnowledgeBase& kb);

  // Zero for names the KB never mentions.
  double Relation(const std::string& relation) const;
  double Entity(const std::string& entity) const;

  std::size_t num_entities() const { return num_entities_; }
  std::size_t num_relations() const { return num_relations_; }
  const std::map<std::string, double>& relations() const { return relation_; }
  const std::map<std::string, double>& entities() const { return entity_; }

  bool operator==(const DiversityIndex&) const = default;

 private:
  std::size_t num_entities_ = 0;
  std::size_t num_relations_ = 0;
  std::map<std::string, double> relation_;
  std::map<std::string, double> entity_;
};

}  // namespace genkb

#endif  // GENKB_ACTIVE_DIVERSITY_H_
