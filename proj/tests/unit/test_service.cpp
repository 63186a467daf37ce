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


#include <doctest.h>
#include <httplib.h>

#include <atomic>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "scripted_session.hpp"
#include "stampsy/backends/mock.hpp"
#include "stampsy/common/error.hpp"
#include "stampsy/service/server.hpp"

using namespace stampsy;
using nlohmann::json;

namespace {

struct Harness {
  std::shared_ptr<backends::FaultyChatBackend> chat;
  std::shared_ptr<engine::MemoryEventStore> store = std::make_shared<engine::MemoryEventStore>();
  std::unique_ptr<service::Server> server;
  std::unique_ptr<httplib::Client> client;

  explicit Harness(service::ServerOptions options = {}) {
    auto config = testing::scripted_config();
    auto b = engine::build_backends(config);
    chat = std::make_shared<backends::FaultyChatBackend>(b.chat);
    b.chat = chat;
    auto eng = std::make_shared<engine::Engine>(config, b, testing::scripted_clock());
    options.corpus_path = testing::data_path("data/corpus/sample.jsonl");
    server = std::make_unique<service::Server>(eng, store, options);
    const int port = server->start("127.0.0.1", 0);
    client = std::make_unique<httplib::Client>("127.0.0.1", port);
    client->set_read_timeout(std::chrono::seconds(10));
  }
  ~Harness() { server->stop(); }

  httplib::Result post(const std::string& path, const json& body) {
    return client->Post(path, body.dump(), "application/json");
  }
};

json body_of(const httplib::Result& r) { return json::parse(r->body); }

}  // namespace

TEST_CASE("status mapping") {
  CHECK(service::http_status(ErrorCode::not_found) == 404);
  CHECK(service::http_status(ErrorCode::lifecycle) == 409);
  CHECK(service::http_status(ErrorCode::conflict) == 409);
  CHECK(service::http_status(ErrorCode::invalid_argument) == 422);
  CHECK(service::http_status(ErrorCode::over_budget) == 422);
  CHECK(service::http_status(ErrorCode::backend_unavailable) == 502);
  CHECK(service::http_status(ErrorCode::config) == 500);
}

TEST_CASE("session lifecycle over HTTP") {
  Harness h;
  auto r = h.post("/sessions", {{"session_id", "s1"}});
  REQUIRE(r);
  CHECK(r->status == 201);
  // The opened event and the opening script.
  CHECK(body_of(r)["last_sequence"] == 2);
  CHECK(h.post("/sessions", {{"session_id", "s1"}})->status == 409);

  r = h.post("/sessions/s1/turns", {{"text", "I cannot sleep at night"}});
  REQUIRE(r->status == 200);
  const json turn = body_of(r);
  CHECK(turn["session_id"] == "s1");
  CHECK(turn.contains("prediction"));
  const auto seq = turn["last_sequence"].get<int>();

  r = h.client->Get("/sessions/s1");
  REQUIRE(r->status == 200);
  CHECK(body_of(r)["events"].size() == static_cast<std::size_t>(seq));
  CHECK(h.client->Get("/sessions/s1/recordings")->status == 200);

  r = h.post("/sessions/s1/close", json::object());
  REQUIRE(r->status == 200);
  CHECK(body_of(r)["status"] == "closed");
  r = h.post("/sessions/s1/turns", {{"text", "hello?"}});
  CHECK(r->status == 409);
  CHECK(body_of(r)["error"]["code"] == "lifecycle");
}

TEST_CASE("error statuses") {
  Harness h;
  CHECK(h.post("/sessions/nope/turns", {{"text", "x"}})->status == 404);
  CHECK(h.client->Get("/sessions/nope")->status == 404);
  CHECK(h.client->Get("/no/such/route")->status == 404);
  h.post("/sessions", {{"session_id", "s2"}});
  CHECK(h.post("/sessions/s2/turns", {{"text", "   "}})->status == 422);
  CHECK(h.post("/sessions/s2/turns", json::object())->status == 422);
  auto r = h.client->Post("/sessions/s2/turns", "{not json", "application/json");
  CHECK(r->status == 422);
  CHECK(body_of(r)["error"].contains("message"));
}

TEST_CASE("backend failure returns 502 and leaves the session unchanged") {
  Harness h;
  h.post("/sessions", {{"session_id", "s3"}});
  const std::string before = h.client->Get("/sessions/s3")->body;
  h.chat->fail_next({ErrorCode::backend_unavailable});
  auto r = h.post("/sessions/s3/turns", {{"text", "hello"}});
  CHECK(r->status == 502);
  CHECK(body_of(r)["error"]["code"] == "backend_unavailable");
  CHECK(h.client->Get("/sessions/s3")->body == before);
  CHECK(h.post("/sessions/s3/turns", {{"text", "hello"}})->status == 200);
}

TEST_CASE("expected_sequence rejects stale writers") {
  Harness h;
  const int seq = body_of(h.post("/sessions", {{"session_id", "s4"}}))["last_sequence"];
  auto ok = h.post("/sessions/s4/turns", {{"text", "first"}, {"expected_sequence", seq}});
  CHECK(ok->status == 200);
  auto stale = h.post("/sessions/s4/turns", {{"text", "second"}, {"expected_sequence", seq}});
  CHECK(stale->status == 409);
  CHECK(body_of(stale)["error"]["code"] == "conflict");
}

TEST_CASE("concurrent turns with the same expected sequence: exactly one wins") {
  Harness h;
  const int seq = body_of(h.post("/sessions", {{"session_id", "s5"}}))["last_sequence"];
  const int port = h.client->port();
  std::atomic<int> ok{0}, conflict{0};
  std::vector<std::thread> threads;
  for (int i = 0; i < 4; ++i) {
    threads.emplace_back([&, i] {
      httplib::Client c("127.0.0.1", port);
      c.set_read_timeout(std::chrono::seconds(10));
      const json body = {{"text", "message " + std::to_string(i)}, {"expected_sequence", seq}};
      auto r = c.Post("/sessions/s5/turns", body.dump(), "application/json");
      if (r && r->status == 200) ++ok;
      if (r && r->status == 409) ++conflict;
    });
  }
  for (auto& t : threads) t.join();
  CHECK(ok == 1);
  CHECK(conflict == 3);
}

TEST_CASE("CORS and bearer token") {
  service::ServerOptions opts;
  opts.api_token = "tok";
  opts.cors_origin = "http://ui.local";
  Harness h(opts);
  CHECK(h.client->Get("/health")->status == 200);
  auto r = h.post("/sessions", json::object());
  CHECK(r->status == 401);
  CHECK(r->get_header_value("Access-Control-Allow-Origin") == "http://ui.local");
  r = h.client->Options("/sessions");
  CHECK(r->status == 204);
  h.client->set_bearer_token_auth("tok");
  r = h.post("/sessions", json::object());
  CHECK(r->status == 201);
  CHECK_FALSE(body_of(r)["session_id"].get<std::string>().empty());
}

TEST_CASE("evaluation and corpus endpoints") {
  Harness h;
  auto r = h.post("/eval/ghsc", json::object());
  REQUIRE(r->status == 200);
  CHECK(body_of(r)["total"] == 55);
  CHECK(body_of(r).contains("others_baseline"));
  r = h.post("/eval/ghsc", {{"predictions", json::array({"others"})}});
  CHECK(r->status == 422);
  r = h.post("/eval/gen", {{"pairs", json::array({{{"candidate", "abc"}, {"references", {"abc"}}}})}});
  REQUIRE(r->status == 200);
  CHECK(body_of(r)["bleu1"].get<double>() == doctest::Approx(1.0));
  r = h.client->Get("/corpus/stats");
  REQUIRE(r->status == 200);
  CHECK(body_of(r)["dialogues"] == 3);
  CHECK(h.client->Get("/corpus/stats?tokens=bogus")->status == 422);
}

TEST_CASE("sessions survive a server restart through the store") {
  auto store = std::make_shared<engine::MemoryEventStore>();
  auto config = testing::scripted_config();
  auto make = [&] {
    auto eng = std::make_shared<engine::Engine>(config, engine::build_backends(config), testing::scripted_clock());
    return std::make_unique<service::Server>(eng, store);
  };
  auto first = make();
  int port = first->start("127.0.0.1", 0);
  {
    httplib::Client c("127.0.0.1", port);
    c.Post("/sessions", json{{"session_id", "keep"}}.dump(), "application/json");
    c.Post("/sessions/keep/turns", json{{"text", "hello"}}.dump(), "application/json");
  }
  first->stop();
  auto second = make();
  port = second->start("127.0.0.1", 0);
  httplib::Client c("127.0.0.1", port);
  auto r = c.Post("/sessions/keep/turns", json{{"text", "again"}}.dump(), "application/json");
  REQUIRE(r);
  CHECK(r->status == 200);
  CHECK(json::parse(r->body)["exchange"] == 2);
  second->stop();
}
