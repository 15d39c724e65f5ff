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

#ifndef GENKB_SERVICE_HTTP_SERVER_H_
#define GENKB_SERVICE_HTTP_SERVER_H_

#include <memory>
#include <string>

#include "genkb/service/session_service.h"

namespace httplib {
class Server;
}

namespace genkb {

// JSON API over a SessionService:
//   POST /sessions                      {entity, mode?, budget?}     201
//   GET  /sessions                                                    200
//   GET  /sessions/{id}                                               200
//   POST /sessions/{id}/annotations     {fact-id: all|some|none}      200
//   POST /sessions/{id}/refit                                         202
//   GET  /sessions/{id}/inferred                                      200
// Errors carry {"error": message}: 400 malformed request, 404 unknown
// session, 409 premature refit (with "pending") or wrong status, 422 cold
// entity (with "fallback").
class HttpServer {
 public:
  explicit HttpServer(SessionService& service);
  ~HttpServer();

  // Binds and serves until Stop(); false when the address is unavailable.
  bool Listen(const std::string& host, int port);
  // Binds an ephemeral port and returns it, -1 on failure.
  int BindToAnyPort(const std::string& host);
  // Serves on a port bound by BindToAnyPort.
  bool ListenAfterBind();
  void Stop();
  bool IsRunning() const;

 private:
  void Routes();

  SessionService& service_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace genkb

#endif  // GENKB_SERVICE_HTTP_SERVER_H_
