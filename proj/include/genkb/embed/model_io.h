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

#ifndef GENKB_EMBED_MODEL_IO_H_
#define GENKB_EMBED_MODEL_IO_H_

#include <filesystem>
#include <istream>
#include <ostream>

#include "genkb/embed/model.h"

namespace genkb {

// Binary layout, all integers and floats little-endian:
//   "GKBHOLE1"  u32 version  u64 dim  u8 heads  u64 seed
//   u64 #entities  u64 #relations  u64 entity-fnv  u64 relation-fnv
//   names (u32 length + bytes), entities first
//   f64 entity vectors in id order, f64 relation vectors (id, head) order
void WriteModel(const EmbeddingModel& model, std::ostream& out);
EmbeddingModel ReadModel(std::istream& in);

void SaveModel(const EmbeddingModel& model, const std::filesystem::path& path);
// Throws NotFoundError when the file is missing.
EmbeddingModel LoadModel(const std::filesystem::path& path);

}  // namespace genkb

#endif  // GENKB_EMBED_MODEL_IO_H_
