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

#include "genkb/service/http_server.h"

#include <functional>

#include <spdlog/spdlog.h>

#include "httplib.h"

namespace genkb {
namespace {

using nlohmann::json;

void Reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void ReplyError(httplib::Response& res, int status, const std::string& message,
                json extra = json::object()) {
  extra["error"] = message;
  Reply(res, status, extra);
}

// Runs `body`, mapping library errors onto HTTP statuses.
void Guard(httplib::Response& res, const std::function<void()>& body) {
  try {
    body();
  } catch (const NotFoundError& e) {
    ReplyError(res, 404, e.what());
  } catch (const PendingAnnotationsError& e) {
    ReplyError(res, 409, e.what(), {{"pending", e.pending()}});
  } catch (const ConflictError& e) {
    ReplyError(res, 409, e.what());
  } catch (const ColdEntityError& e) {
    ReplyError(res, 422, e.what(),
               {{"fallback", std::string(ToString(ProposalMode::kSchemaConsistent))}});
  } catch (const BadRequestError& e) {
    ReplyError(res, 400, e.what());
  } catch (const ConfigError& e) {
    ReplyError(res, 400, e.what());
  } catch (const std::exception& e) {
    spdlog::error("request failed: {}", e.what());
    ReplyError(res, 500, e.what());
  }
}

json ParseBody(const httplib::Request& req) {
  try {
    return json::parse(req.body);
  } catch (const json::exception&) {
    throw BadRequestError("request body is not valid JSON");
  }
}

}  // namespace

HttpServer::HttpServer(SessionService& service)
    : service_(service), server_(std::make_unique<httplib::Server>()) {
  Routes();
}

HttpServer::~HttpServer() { Stop(); }

void HttpServer::Routes() {
  auto& s = *server_;
  s.Post("/sessions", [this](const httplib::Request& req, httplib::Response& res) {
    Guard(res, [&] {
      const json body = ParseBody(req);
      if (!body.is_object() || !body.contains("entity") ||
          !body["entity"].is_string()) {
        throw BadRequestError("'entity' (string) is required");
      }
      std::optional<ProposalMode> mode;
      if (body.contains("mode")) {
        if (!body["mode"].is_string()) throw BadRequestError("'mode' must be a string");
        mode = ParseProposalMode(body["mode"].get<std::string>());
        if (!mode) throw BadRequestError("unknown mode '" + body["mode"].get<std::string>() + "'");
      }
      std::optional<std::size_t> budget;
      if (body.contains("budget")) {
        if (!body["budget"].is_number_unsigned()) {
          throw BadRequestError("'budget' must be a non-negative integer");
        }
        budget = body["budget"].get<std::size_t>();
      }
      const auto record = service_.Create(body["entity"].get<std::string>(), mode, budget);
      Reply(res, 201, RecordView(record));
    });
  });

  s.Get("/sessions", [this](const httplib::Request&, httplib::Response& res) {
    Guard(res, [&] {
      json list = json::array();
      for (const auto& r : service_.List()) {
        list.push_back({{"session_id", r.id},
                        {"entity", r.session.entity},
                        {"status", ToString(r.status)}});
      }
      Reply(res, 200, {{"sessions", list}});
    });
  });

  s.Get(R"(/sessions/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
    Guard(res, [&] { Reply(res, 200, RecordView(service_.Get(req.matches[1]))); });
  });

  s.Post(R"(/sessions/([^/]+)/annotations)",
         [this](const httplib::Request& req, httplib::Response& res) {
           Guard(res, [&] {
             const std::string id = req.matches[1];
             service_.Get(id);
             const json body = ParseBody(req);
             if (!body.is_object()) {
               throw BadRequestError("annotations must be an object of fact-id to label");
             }
             std::map<std::string, QuantLabel> labels;
             for (const auto& [fact, value] : body.items()) {
               if (!value.is_string()) {
                 throw BadRequestError("label for '" + fact + "' must be a string");
               }
               auto label = ParseQuantLabel(value.get<std::string>());
               if (!label) {
                 throw BadRequestError("invalid label '" + value.get<std::string>() +
                                       "' for '" + fact + "'");
               }
               labels[fact] = *label;
             }
             const auto result = service_.Annotate(id, labels);
             json view = RecordView(result.record);
             view["changed"] = result.changed;
             Reply(res, 200, view);
           });
         });

  s.Post(R"(/sessions/([^/]+)/refit)", [this](const httplib::Request& req, httplib::Response& res) {
    Guard(res, [&] {
      const auto record = service_.RequestRefit(req.matches[1]);
      Reply(res, record.status == SessionStatus::kDone ? 200 : 202, RecordView(record));
    });
  });

  s.Get(R"(/sessions/([^/]+)/inferred)", [this](const httplib::Request& req, httplib::Response& res) {
    Guard(res, [&] {
      const std::string id = req.matches[1];
      const auto facts = service_.Inferred(id);
      Reply(res, 200, {{"session_id", id}, {"status", "done"}, {"inferred", InferredJson(facts)}});
    });
  });

  s.Get("/health", [](const httplib::Request&, httplib::Response& res) {
    Reply(res, 200, {{"status", "ok"}});
  });
}

bool HttpServer::Listen(const std::string& host, int port) {
  return server_->listen(host, port);
}

int HttpServer::BindToAnyPort(const std::string& host) {
  return server_->bind_to_any_port(host);
}

bool HttpServer::ListenAfterBind() { return server_->listen_after_bind(); }

void HttpServer::Stop() {
  if (server_->is_running()) server_->stop();
}

bool HttpServer::IsRunning() const { return server_->is_running(); }

}  // namespace genkb
