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

#ifndef GENKB_SERVICE_SESSION_SERVICE_H_
#define GENKB_SERVICE_SESSION_SERVICE_H_

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "genkb/active/episode.h"
#include "genkb/embed/model.h"
#include "genkb/kb/background.h"
#include "genkb/kb/knowledge_base.h"
#include "genkb/service/session_store.h"
#include "json.hpp"

namespace genkb {

// Malformed request: bad JSON, unknown label, unknown fact id.
class BadRequestError : public Error {
 public:
  using Error::Error;
};

// Request not valid in the session's current status.
class ConflictError : public Error {
 public:
  using Error::Error;
};

struct ServiceContext {
  KnowledgeBase kb;
  Background background;
  EmbeddingModel snapshot;
  EpisodeConfig config;
};

// Session lifecycle behind the HTTP API. Records are persisted on every
// change and reloaded on construction; sessions caught mid-proposal are
// proposed again and sessions caught mid-refit are refit again.
class SessionService {
 public:
  SessionService(ServiceContext context, const std::filesystem::path& output_dir);
  ~SessionService();
  SessionService(const SessionService&) = delete;
  SessionService& operator=(const SessionService&) = delete;

  // Proposes and selects queries for `entity`. Throws ColdEntityError,
  // ConfigError on a bad budget.
  SessionRecord Create(const std::string& entity,
                       std::optional<ProposalMode> mode = std::nullopt,
                       std::optional<std::size_t> budget = std::nullopt);
  // Throws NotFoundError for unknown ids.
  SessionRecord Get(const std::string& id) const;
  std::vector<SessionRecord> List() const;

  struct AnnotateResult {
    SessionRecord record;
    bool changed = false;
  };
  // Sets labels for selected fact ids; resubmitting a label is a no-op.
  // Throws BadRequestError for ids outside the selection, ConflictError once
  // refit has started.
  AnnotateResult Annotate(const std::string& id,
                          const std::map<std::string, QuantLabel>& labels);

  // Starts a background refit. Throws PendingAnnotationsError while
  // selected facts lack labels. Returns the record as of the request.
  SessionRecord RequestRefit(const std::string& id);

  // Inferred facts of a finished session; ConflictError before that.
  std::vector<InferredFact> Inferred(const std::string& id) const;

  // Blocks until every background job has finished.
  void WaitIdle();

  const ServiceContext& context() const { return context_; }

 private:
  SessionRecord& Find(const std::string& id);
  const SessionRecord& Find(const std::string& id) const;
  void Transition(SessionRecord& record, SessionStatus to);
  void Persist(SessionRecord& record);
  QuerySession Propose(const std::string& entity, ProposalMode mode,
                       std::size_t budget) const;
  void LaunchRefit(const std::string& id, QuerySession session);
  void RunRefit(const std::string& id, const QuerySession& session);

  ServiceContext context_;
  SessionStore store_;
  mutable std::mutex mutex_;
  std::map<std::string, SessionRecord> records_;
  std::mutex jobs_mutex_;
  std::vector<std::thread> jobs_;
};

// JSON views returned by the HTTP API.
nlohmann::json QuestionsJson(const SessionRecord& record);
nlohmann::json RecordView(const SessionRecord& record);
nlohmann::json InferredJson(const std::vector<InferredFact>& facts);

}  // namespace genkb

#endif  // GENKB_SERVICE_SESSION_SERVICE_H_
