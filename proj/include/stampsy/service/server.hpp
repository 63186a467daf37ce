// Copyright 2026 The Stampsy Authors.
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


#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "stampsy/engine/engine.hpp"
#include "stampsy/engine/events.hpp"

// JSON-over-HTTP front end for the engine, the corpus statistics and the
// evaluation harness.
//
//   POST /sessions                    {"session_id"?, "ccm"?}
//   POST /sessions/{id}/turns         {"text", "expected_sequence"?, "gold_skill"?}
//                                     expected_sequence is the last_sequence the
//                                     caller saw; any other value is a conflict.
//   GET  /sessions/{id}               event log
//   GET  /sessions/{id}/recordings
//   POST /sessions/{id}/close
//   POST /eval/ghsc                   {"predictions"?, "use_context"?}
//   POST /eval/gen                    {"pairs", "averaging"?, "embed"?}
//   GET  /corpus/stats                ?tokens=mixed|characters|whitespace
//   GET  /health
//
// Errors are {"error": {"code", "message"}} with 401 (token), 404 (unknown
// session), 409 (closed session, stale sequence, taken id), 422 (bad request
// body) and 502 (backend failure; the session is left as it was).
namespace stampsy::service {

struct ServerOptions {
  std::string cors_origin = "*";
  // Required as "Authorization: Bearer <token>" when non-empty.
  std::string api_token;
  std::optional<std::filesystem::path> corpus_path;
};

int http_status(ErrorCode code);

class Server {
 public:
  Server(std::shared_ptr<engine::Engine> engine, std::shared_ptr<engine::EventStore> store,
         ServerOptions options = {});
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Binds and serves on a background thread; port 0 picks a free port.
  // Returns the bound port. Throws service_error when binding fails.
  int start(const std::string& host, int port);
  // Binds and serves on the calling thread until stop().
  void run(const std::string& host, int port);
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace stampsy::service
