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

#include "genkb/embed/model_io.h"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>

namespace genkb {
namespace {

constexpr char kMagic[8] = {'G', 'K', 'B', 'H', 'O', 'L', 'E', '1'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void PutLe(std::ostream& out, T value) {
  std::array<char, sizeof(T)> bytes;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    bytes[i] = static_cast<char>((value >> (8 * i)) & 0xff);
  }
  out.write(bytes.data(), bytes.size());
}

template <typename T>
T GetLe(std::istream& in) {
  std::array<unsigned char, sizeof(T)> bytes;
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
    throw Error("model file truncated");
  }
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    value |= static_cast<T>(bytes[i]) << (8 * i);
  }
  return value;
}

void PutDouble(std::ostream& out, double x) {
  PutLe<std::uint64_t>(out, std::bit_cast<std::uint64_t>(x));
}

double GetDouble(std::istream& in) {
  return std::bit_cast<double>(GetLe<std::uint64_t>(in));
}

void PutNames(std::ostream& out, const Vocabulary& vocab) {
  for (const auto& name : vocab.names()) {
    PutLe<std::uint32_t>(out, static_cast<std::uint32_t>(name.size()));
    out.write(name.data(), static_cast<std::streamsize>(name.size()));
  }
}

Vocabulary GetNames(std::istream& in, std::uint64_t count) {
  Vocabulary vocab;
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto len = GetLe<std::uint32_t>(in);
    std::string name(len, '\0');
    if (!in.read(name.data(), len)) throw Error("model file truncated");
    if (vocab.Intern(name) != static_cast<std::int32_t>(i)) {
      throw Error("model file repeats name '" + name + "'");
    }
  }
  return vocab;
}

}  // namespace

void WriteModel(const EmbeddingModel& model, std::ostream& out) {
  out.write(kMagic, sizeof(kMagic));
  PutLe<std::uint32_t>(out, kVersion);
  PutLe<std::uint64_t>(out, model.dim());
  PutLe<std::uint8_t>(out, static_cast<std::uint8_t>(model.heads()));
  PutLe<std::uint64_t>(out, model.seed());
  PutLe<std::uint64_t>(out, model.entities().size());
  PutLe<std::uint64_t>(out, model.relations().size());
  PutLe<std::uint64_t>(out, model.entities().Fingerprint());
  PutLe<std::uint64_t>(out, model.relations().Fingerprint());
  PutNames(out, model.entities());
  PutNames(out, model.relations());
  for (double x : model.entity_data()) PutDouble(out, x);
  for (double x : model.relation_data()) PutDouble(out, x);
}

EmbeddingModel ReadModel(std::istream& in) {
  char magic[sizeof(kMagic)];
  if (!in.read(magic, sizeof(magic)) ||
      std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw Error("not a model file (bad magic)");
  }
  const auto version = GetLe<std::uint32_t>(in);
  if (version != kVersion) {
    throw Error("unsupported model version " + std::to_string(version));
  }
  const auto dim = GetLe<std::uint64_t>(in);
  const auto heads = GetLe<std::uint8_t>(in);
  if (heads != 1 && heads != 3) throw Error("model file has bad head count");
  const auto seed = GetLe<std::uint64_t>(in);
  const auto n_entities = GetLe<std::uint64_t>(in);
  const auto n_relations = GetLe<std::uint64_t>(in);
  const auto entity_fnv = GetLe<std::uint64_t>(in);
  const auto relation_fnv = GetLe<std::uint64_t>(in);
  Vocabulary entities = GetNames(in, n_entities);
  Vocabulary relations = GetNames(in, n_relations);
  if (entities.Fingerprint() != entity_fnv ||
      relations.Fingerprint() != relation_fnv) {
    throw Error("model file vocabulary hash mismatch");
  }
  std::vector<double> entity_data(n_entities * dim);
  for (double& x : entity_data) x = GetDouble(in);
  std::vector<double> relation_data(n_relations * heads * dim);
  for (double& x : relation_data) x = GetDouble(in);
  return EmbeddingModel::FromParts(
      std::move(entities), std::move(relations), dim,
      heads == 1 ? LossMode::kBinary : LossMode::kMulticlass, seed,
      std::move(entity_data), std::move(relation_data));
}

void SaveModel(const EmbeddingModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  WriteModel(model, out);
  if (!out) throw Error("failed writing " + path.string());
}

EmbeddingModel LoadModel(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFoundError("model not found: " + path.string());
  return ReadModel(in);
}

}  // namespace genkb
