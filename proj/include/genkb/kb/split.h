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

#ifndef GENKB_KB_SPLIT_H_
#define GENKB_KB_SPLIT_H_

#include <cstdint>

#include "genkb/kb/knowledge_base.h"

namespace genkb {

// Three disjoint parts of one knowledge base. All parts share the source
// vocabularies, so ids are interchangeable between them.
struct DatasetSplit {
  KnowledgeBase train;
  KnowledgeBase validation;
  KnowledgeBase test;
  std::uint64_t seed = 0;
};

struct SplitSizes {
  std::size_t train = 0;
  std::size_t validation = 0;
  std::size_t test = 0;
};

// 3/1/1 proportions: test gets floor(n/5), validation round(n/5), train the
// rest.
SplitSizes ComputeSplitSizes(std::size_t n);

// Shuffles the canonically ordered triples with `seed` and partitions them.
// Requires at least five triples.
DatasetSplit SplitKb(const KnowledgeBase& kb, std::uint64_t seed);

}  // namespace genkb

#endif  // GENKB_KB_SPLIT_H_
