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

#include "genkb/service/session_store.h"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <random>

#include "genkb/error.h"

namespace genkb {
namespace {

using nlohmann::json;

constexpr SessionStatus kOrder[] = {
    SessionStatus::kProposing, SessionStatus::kAwaitingAnnotation,
    SessionStatus::kRefitting, SessionStatus::kDone};

std::optional<Provenance> ParseProvenance(std::string_view text) {
  for (auto p : {Provenance::kAnnotation, Provenance::kSiblingAgreement,
                 Provenance::kFactorization}) {
    if (ToString(p) == text) return p;
  }
  return std::nullopt;
}

[[noreturn]] void Malformed(const std::string& what) {
  throw ParseError("session record", 0, what);
}

}  // namespace

std::string_view ToString(SessionStatus status) {
  switch (status) {
    case SessionStatus::kProposing: return "proposing";
    case SessionStatus::kAwaitingAnnotation: return "awaiting-annotation";
    case SessionStatus::kRefitting: return "refitting";
    case SessionStatus::kDone: return "done";
  }
  return "proposing";
}

std::optional<SessionStatus> ParseSessionStatus(std::string_view text) {
  for (auto s : kOrder) {
    if (ToString(s) == text) return s;
  }
  return std::nullopt;
}

bool IsAllowedTransition(SessionStatus from, SessionStatus to) {
  const int a = static_cast<int>(from);
  const int b = static_cast<int>(to);
  return b == a || b == a + 1;
}

json ToJson(const InferredFact& f) {
  return {{"source", f.triple.source},
          {"relation", f.triple.relation},
          {"target", f.triple.target},
          {"label", ToString(f.label)},
          {"provenance", ToString(f.provenance)},
          {"probability", f.probability}};
}

InferredFact InferredFactFromJson(const json& j) {
  try {
    InferredFact f;
    f.triple = {j.at("source").get<std::string>(),
                j.at("relation").get<std::string>(),
                j.at("target").get<std::string>()};
    auto label = ParseQuantLabel(j.at("label").get<std::string>());
    auto provenance = ParseProvenance(j.at("provenance").get<std::string>());
    if (!label || !provenance) Malformed("bad inferred fact");
    f.label = *label;
    f.provenance = *provenance;
    f.probability = j.at("probability").get<double>();
    return f;
  } catch (const json::exception& e) {
    Malformed(e.what());
  }
}

json ToJson(const SessionRecord& r) {
  json inferred = json::array();
  for (const auto& f : r.inferred) inferred.push_back(ToJson(f));
  return {{"id", r.id},
          {"status", ToString(r.status)},
          {"created", r.created},
          {"updated", r.updated},
          {"session", ToJson(r.session)},
          {"inferred", inferred},
          {"error", r.error}};
}

SessionRecord SessionRecordFromJson(const json& j) {
  try {
    SessionRecord r;
    r.id = j.at("id").get<std::string>();
    auto status = ParseSessionStatus(j.at("status").get<std::string>());
    if (!status) Malformed("bad status");
    r.status = *status;
    r.created = j.at("created").get<std::string>();
    r.updated = j.at("updated").get<std::string>();
    r.session = SessionFromJson(j.at("session"));
    for (const auto& f : j.at("inferred")) {
      r.inferred.push_back(InferredFactFromJson(f));
    }
    r.error = j.value("error", "");
    return r;
  } catch (const json::exception& e) {
    Malformed(e.what());
  }
}

std::string UtcNow() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      now.time_since_epoch())
                      .count() %
                  1000;
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d.%03dZ",
                tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                tm.tm_min, tm.tm_sec, static_cast<int>(ms));
  return buf;
}

SessionStore::SessionStore(std::filesystem::path root)
    : dir_(std::move(root) / "sessions") {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path SessionStore::PathOf(const std::string& id) const {
  return dir_ / (id + ".json");
}

std::map<std::string, SessionRecord> SessionStore::LoadAll() const {
  std::map<std::string, SessionRecord> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw ParseError(entry.path().string(), 0, e.what());
    }
    auto record = SessionRecordFromJson(j);
    out.emplace(record.id, std::move(record));
  }
  return out;
}

void SessionStore::Save(const SessionRecord& record) const {
  const auto path = PathOf(record.id);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << ToJson(record).dump(2) << '\n';
    out.flush();
    if (!out) throw Error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string SessionStore::NewId() {
  std::lock_guard lock(mutex_);
  static thread_local std::mt19937_64 rng(std::random_device{}());
  while (true) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(rng()));
    std::string id = buf;
    if (!std::filesystem::exists(PathOf(id))) return id;
  }
}

}  // namespace genkb
