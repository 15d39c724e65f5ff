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

#ifndef GENKB_SERVICE_SESSION_STORE_H_
#define GENKB_SERVICE_SESSION_STORE_H_

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genkb/active/episode.h"
#include "genkb/active/session.h"
#include "json.hpp"

namespace genkb {

enum class SessionStatus { kProposing, kAwaitingAnnotation, kRefitting, kDone };

std::string_view ToString(SessionStatus status);
std::optional<SessionStatus> ParseSessionStatus(std::string_view text);
// Only proposing -> awaiting-annotation -> refitting -> done, plus staying put.
bool IsAllowedTransition(SessionStatus from, SessionStatus to);

struct SessionRecord {
  std::string id;
  QuerySession session;
  SessionStatus status = SessionStatus::kProposing;
  std::string created;  // UTC, ISO 8601
  std::string updated;
  std::vector<InferredFact> inferred;  // filled once done
  std::string error;                   // last failure, empty when none

  bool operator==(const SessionRecord&) const = default;
};

nlohmann::json ToJson(const InferredFact& fact);
InferredFact InferredFactFromJson(const nlohmann::json& json);
nlohmann::json ToJson(const SessionRecord& record);
// Throws ParseError on malformed documents.
SessionRecord SessionRecordFromJson(const nlohmann::json& json);

std::string UtcNow();

// One JSON file per session under `<root>/sessions`, each replaced
// atomically (write to a temporary file, then rename) on every save.
class SessionStore {
 public:
  explicit SessionStore(std::filesystem::path root);

  // Every persisted record, by id. Unreadable files raise ParseError.
  std::map<std::string, SessionRecord> LoadAll() const;
  void Save(const SessionRecord& record) const;
  std::filesystem::path PathOf(const std::string& id) const;

  // Fresh id not used by any persisted record.
  std::string NewId();

 private:
  std::filesystem::path dir_;
  std::mutex mutex_;
};

}  // namespace genkb

#endif  // GENKB_SERVICE_SESSION_STORE_H_
