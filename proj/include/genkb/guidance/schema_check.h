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

#ifndef GENKB_GUIDANCE_SCHEMA_CHECK_H_
#define GENKB_GUIDANCE_SCHEMA_CHECK_H_

#include <optional>
#include <string>
#include <vector>

#include "genkb/embed/model.h"
#include "genkb/kb/background.h"
#include "genkb/kb/knowledge_base.h"

namespace genkb {

struct ConsistencyVerdict {
  bool consistent = false;
  // The relation has no schema entry, so any triple passes.
  bool unconstrained = false;
  // First admissible (domain, range) pair, in schema order, matched by the
  // triple's types. Empty when inconsistent or unconstrained.
  std::optional<DomainRange> witness;
};

// Consistent iff some (D, R) of the relation's schema has D among the
// source's types and R among the target's types. Untyped entities match no
// pair.
ConsistencyVerdict SchemaConsistent(const NamedTriple& triple,
                                    const Schema& schema,
                                    const TypeMap& types);

struct FilterResult {
  std::vector<ScoredTriple> survivors;
  std::size_t removed = 0;
};

// Drops schema-inconsistent predictions; survivors keep their relative
// order. Names are resolved through `vocab`.
FilterResult FilterPredictions(const std::vector<ScoredTriple>& ranked,
                               const EmbeddingModel& vocab,
                               const Schema& schema, const TypeMap& types);

// Relations of `kb` with no schema entry, sorted.
std::vector<std::string> UnconstrainedRelations(const KnowledgeBase& kb,
                                                const Schema& schema);

}  // namespace genkb

#endif  // GENKB_GUIDANCE_SCHEMA_CHECK_H_
