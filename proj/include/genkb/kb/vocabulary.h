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

#ifndef GENKB_KB_VOCABULARY_H_
#define GENKB_KB_VOCABULARY_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace genkb {

// Dense integer id tagged by what it indexes, so entity and relation ids
// cannot be mixed up.
template <typename Tag>
struct StrongId {
  std::int32_t value = -1;

  constexpr StrongId() = default;
  constexpr explicit StrongId(std::int32_t v) : value(v) {}
  constexpr auto operator<=>(const StrongId&) const = default;
  constexpr std::size_t index() const { return static_cast<std::size_t>(value); }
};

struct EntityTag {};
struct RelationTag {};
using EntityId = StrongId<EntityTag>;
using RelationId = StrongId<RelationTag>;

// Insertion-ordered string interner. Ids are assigned in order of first
// appearance and never change.
class Vocabulary {
 public:
  std::int32_t Intern(std::string_view name);
  std::optional<std::int32_t> Find(std::string_view name) const;
  const std::string& Name(std::int32_t id) const { return names_.at(id); }
  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }

  // FNV-1a over the names in id order; identifies the id assignment.
  std::uint64_t Fingerprint() const;

  bool operator==(const Vocabulary& other) const {
    return names_ == other.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::int32_t> index_;
};

}  // namespace genkb

template <typename Tag>
struct std::hash<genkb::StrongId<Tag>> {
  std::size_t operator()(const genkb::StrongId<Tag>& id) const noexcept {
    return std::hash<std::int32_t>{}(id.value);
  }
};

#endif  // GENKB_KB_VOCABULARY_H_
