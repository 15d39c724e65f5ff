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

#include "genkb/service/session_service.h"

#include <utility>

#include <spdlog/spdlog.h>

#include "genkb/guidance/schema_check.h"

namespace genkb {

using nlohmann::json;

SessionService::SessionService(ServiceContext context,
                               const std::filesystem::path& output_dir)
    : context_(std::move(context)), store_(output_dir) {
  context_.config.Validate();
  records_ = store_.LoadAll();
  const std::string snapshot = ModelSnapshotId(context_.snapshot);
  for (auto& [id, record] : records_) {
    if (record.session.model_snapshot != snapshot &&
        record.status != SessionStatus::kProposing) {
      spdlog::warn("session {} was proposed against model {}, serving {}", id,
                   record.session.model_snapshot, snapshot);
    }
    if (record.status == SessionStatus::kProposing) {
      spdlog::info("resuming proposal for session {}", id);
      record.session = Propose(record.session.entity, record.session.mode,
                               record.session.budget);
      Transition(record, SessionStatus::kAwaitingAnnotation);
    } else if (record.status == SessionStatus::kRefitting) {
      spdlog::info("resuming refit for session {}", id);
      LaunchRefit(id, record.session);
    }
  }
}

SessionService::~SessionService() { WaitIdle(); }

void SessionService::WaitIdle() {
  while (true) {
    std::vector<std::thread> jobs;
    {
      std::lock_guard lock(jobs_mutex_);
      jobs.swap(jobs_);
    }
    if (jobs.empty()) return;
    for (auto& job : jobs) job.join();
  }
}

SessionRecord& SessionService::Find(const std::string& id) {
  auto it = records_.find(id);
  if (it == records_.end()) throw NotFoundError("unknown session '" + id + "'");
  return it->second;
}

const SessionRecord& SessionService::Find(const std::string& id) const {
  auto it = records_.find(id);
  if (it == records_.end()) throw NotFoundError("unknown session '" + id + "'");
  return it->second;
}

void SessionService::Persist(SessionRecord& record) {
  record.updated = UtcNow();
  store_.Save(record);
}

void SessionService::Transition(SessionRecord& record, SessionStatus to) {
  if (!IsAllowedTransition(record.status, to)) {
    throw ConflictError("session " + record.id + " cannot move from " +
                        std::string(ToString(record.status)) + " to " +
                        std::string(ToString(to)));
  }
  record.status = to;
  Persist(record);
}

QuerySession SessionService::Propose(const std::string& entity,
                                     ProposalMode mode,
                                     std::size_t budget) const {
  EpisodeConfig config = context_.config;
  config.mode = mode;
  config.budget = budget;
  return StartSession(entity, context_.kb, context_.background,
                      context_.snapshot, config);
}

SessionRecord SessionService::Create(const std::string& entity,
                                     std::optional<ProposalMode> mode,
                                     std::optional<std::size_t> budget) {
  if (entity.empty()) throw BadRequestError("entity is required");
  if (!context_.background.taxonomy.Contains(entity) && !context_.kb.FindEntity(entity)) {
    throw BadRequestError("entity '" + entity + "' is in neither the taxonomy nor the KB");
  }
  const ProposalMode m = mode.value_or(context_.config.mode);
  const std::size_t b = budget.value_or(context_.config.budget);
  // Proposal errors (a cold entity) surface before anything is persisted.
  QuerySession session = Propose(entity, m, b);

  SessionRecord record;
  record.id = store_.NewId();
  record.created = UtcNow();
  record.session.entity = entity;
  record.session.mode = m;
  record.session.budget = b;
  record.status = SessionStatus::kProposing;
  std::lock_guard lock(mutex_);
  Persist(record);
  record.session = std::move(session);
  Transition(record, SessionStatus::kAwaitingAnnotation);
  spdlog::info("session {} for '{}': {} candidates, {} selected, {} accepted",
               record.id, entity, record.session.candidates.size(),
               record.session.selected.size(), record.session.accepted.size());
  records_[record.id] = record;
  return record;
}

SessionRecord SessionService::Get(const std::string& id) const {
  std::lock_guard lock(mutex_);
  return Find(id);
}

std::vector<SessionRecord> SessionService::List() const {
  std::lock_guard lock(mutex_);
  std::vector<SessionRecord> out;
  for (const auto& [_, record] : records_) out.push_back(record);
  return out;
}

SessionService::AnnotateResult SessionService::Annotate(
    const std::string& id, const std::map<std::string, QuantLabel>& labels) {
  std::lock_guard lock(mutex_);
  SessionRecord& record = Find(id);
  if (record.status != SessionStatus::kAwaitingAnnotation) {
    throw ConflictError("session " + id + " is " +
                        std::string(ToString(record.status)) +
                        "; annotations are closed");
  }
  for (const auto& [fact, _] : labels) {
    if (!record.session.IsSelected(fact)) {
      throw BadRequestError("'" + fact + "' is not a selected fact id");
    }
  }
  bool changed = false;
  for (const auto& [fact, label] : labels) {
    auto [it, inserted] = record.session.annotations.emplace(fact, label);
    if (inserted || it->second != label) {
      it->second = label;
      changed = true;
    }
  }
  if (changed) Persist(record);
  return {record, changed};
}

SessionRecord SessionService::RequestRefit(const std::string& id) {
  std::lock_guard lock(mutex_);
  SessionRecord& record = Find(id);
  if (record.status == SessionStatus::kDone) return record;
  if (record.status == SessionStatus::kRefitting && record.error.empty()) {
    return record;
  }
  if (record.status == SessionStatus::kAwaitingAnnotation) {
    const auto pending = record.session.PendingFactIds();
    if (!pending.empty()) throw PendingAnnotationsError(pending.size());
    Transition(record, SessionStatus::kRefitting);
  } else if (record.status != SessionStatus::kRefitting) {
    throw ConflictError("session " + id + " is still proposing");
  }
  record.error.clear();
  Persist(record);
  LaunchRefit(id, record.session);
  return record;
}

void SessionService::LaunchRefit(const std::string& id, QuerySession session) {
  std::lock_guard lock(jobs_mutex_);
  jobs_.emplace_back([this, id, session = std::move(session)] {
    RunRefit(id, session);
  });
}

void SessionService::RunRefit(const std::string& id,
                              const QuerySession& session) {
  std::vector<InferredFact> inferred;
  std::string error;
  try {
    auto result = Refit(session, context_.kb, context_.background, context_.config);
    std::size_t dropped = 0;
    for (auto& fact : result.inferred) {
      if (SchemaConsistent(fact.triple, context_.background.schema,
                           context_.background.types)
              .consistent) {
        inferred.push_back(std::move(fact));
      } else {
        ++dropped;
      }
    }
    if (dropped) spdlog::warn("session {}: {} inferred facts failed the schema re-check", id, dropped);
  } catch (const std::exception& e) {
    error = e.what();
  }
  std::lock_guard lock(mutex_);
  auto it = records_.find(id);
  if (it == records_.end()) return;
  SessionRecord& record = it->second;
  if (!error.empty()) {
    spdlog::error("refit of session {} failed: {}", id, error);
    record.error = error;
    Persist(record);
    return;
  }
  record.inferred = std::move(inferred);
  record.error.clear();
  Transition(record, SessionStatus::kDone);
  spdlog::info("session {} refit: {} inferred facts", id, record.inferred.size());
}

std::vector<InferredFact> SessionService::Inferred(const std::string& id) const {
  std::lock_guard lock(mutex_);
  const SessionRecord& record = Find(id);
  if (record.status != SessionStatus::kDone) {
    throw ConflictError("session " + id + " is " +
                        std::string(ToString(record.status)) +
                        "; inferred facts are available once done");
  }
  return record.inferred;
}

json QuestionsJson(const SessionRecord& record) {
  const auto& s = record.session;
  json questions = json::array();
  for (std::size_t index : s.selected) {
    const auto& c = s.candidates[index];
    const auto triple = c.Project(s.entity);
    const std::string fact = QuerySession::FactId(index);
    auto answer = s.annotations.find(fact);
    questions.push_back(
        {{"fact_id", fact},
         {"question", RenderQuestion(triple)},
         {"source", triple.source},
         {"relation", triple.relation},
         {"target", triple.target},
         {"p", c.p},
         {"answer", answer == s.annotations.end()
                        ? json(nullptr)
                        : json(std::string(ToString(answer->second)))}});
  }
  return questions;
}

json RecordView(const SessionRecord& record) {
  const auto& s = record.session;
  json accepted = json::array();
  for (const auto& c : s.accepted) {
    const auto t = c.Project(s.entity);
    accepted.push_back({{"source", t.source},
                        {"relation", t.relation},
                        {"target", t.target},
                        {"p", c.p}});
  }
  const std::size_t pending = s.PendingFactIds().size();
  return {{"session_id", record.id},
          {"status", ToString(record.status)},
          {"created", record.created},
          {"updated", record.updated},
          {"entity", s.entity},
          {"mode", ToString(s.mode)},
          {"selection", ToString(s.selection)},
          {"budget", s.budget},
          {"model_snapshot", s.model_snapshot},
          {"label_options", {"all", "some", "none"}},
          {"questions", QuestionsJson(record)},
          {"answered", s.selected.size() - pending},
          {"pending", pending},
          {"accepted", accepted},
          {"error", record.error},
          {"session", ToJson(s)}};
}

json InferredJson(const std::vector<InferredFact>& facts) {
  json out = json::array();
  for (const auto& f : facts) out.push_back(ToJson(f));
  return out;
}

}  // namespace genkb
