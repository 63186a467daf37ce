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
#include <chrono>
#include <cmath>
#include <mutex>
#include <thread>
#include <vector>

#include "stampsy/backends/chat.hpp"
#include "stampsy/backends/embed.hpp"
#include "stampsy/backends/http.hpp"
#include "stampsy/backends/mock.hpp"
#include "stampsy/backends/retry.hpp"
#include "stampsy/common/error.hpp"

using namespace stampsy;
using namespace stampsy::backends;
using namespace std::chrono_literals;
using nlohmann::json;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no stampsy::Error thrown");
  return ErrorCode::invalid_argument;
}

// Local HTTP server on an ephemeral port for the lifetime of the fixture.
struct FakeService {
  httplib::Server server;
  std::thread thread;
  int port = 0;
  std::atomic<int> chat_calls{0};
  std::atomic<int> fail_first{0};
  std::mutex mu;
  std::string last_auth;

  FakeService() {
    server.Post("/v1/chat", [this](const httplib::Request& req, httplib::Response& res) {
      const int n = ++chat_calls;
      if (n <= fail_first) {
        res.status = 503;
        return;
      }
      const json body = json::parse(req.body);
      res.set_content(json{{"content", "echo " + body["messages"].back()["content"].get<std::string>()}}.dump(),
                      "application/json");
    });
    server.Post("/v1/bad-request", [](const httplib::Request&, httplib::Response& res) {
      res.status = 400;
      res.set_content("nope", "text/plain");
    });
    server.Post("/v1/not-json", [](const httplib::Request&, httplib::Response& res) {
      res.set_content("<html>", "text/html");
    });
    server.Post("/v1/embed", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(R"({"vectors": [[3.0, 4.0]]})", "application/json");
    });
    server.Post("/v1/classify", [this](const httplib::Request& req, httplib::Response& res) {
      const json body = json::parse(req.body);
      {
        std::lock_guard lock(mu);
        last_auth = req.get_header_value("Authorization");
      }
      json probs = json::object();
      for (auto s : corpus::kAllSkills) probs[std::string(corpus::to_string(s))] = 0.0;
      probs["restatements"] = body["segments"].size() == 2 ? 1.0 : 0.0;
      probs["others"] = 1.0 - probs["restatements"].get<double>();
      res.set_content(json{{"probabilities", probs}}.dump(), "application/json");
    });
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~FakeService() {
    server.stop();
    thread.join();
  }
  std::string endpoint() const { return "http://127.0.0.1:" + std::to_string(port) + "/v1"; }
};

HttpOptions quick() {
  HttpOptions o;
  o.timeout = 2000ms;
  o.sleeper = [](std::chrono::milliseconds) {};
  return o;
}

}  // namespace

TEST_CASE("retry policy retries transient errors with growing backoff") {
  std::vector<long long> sleeps;
  Sleeper sleeper = [&](std::chrono::milliseconds d) { sleeps.push_back(d.count()); };
  RetryPolicy policy{3, 100ms, 2.0};
  int calls = 0, attempts = 0;
  const int v = with_retry(
      policy,
      [&] {
        if (++calls < 3) throw Error(ErrorCode::backend_unavailable, "down");
        return 7;
      },
      sleeper, &attempts);
  CHECK(v == 7);
  CHECK(attempts == 3);
  CHECK(sleeps == std::vector<long long>{100, 200});

  calls = 0;
  CHECK(code_of([&] {
          with_retry(policy, [&]() -> int { ++calls; throw Error(ErrorCode::service_error, "400"); }, sleeper);
        }) == ErrorCode::service_error);
  CHECK(calls == 1);

  calls = 0;
  CHECK(code_of([&] {
          with_retry(RetryPolicy{1, 1ms, 2.0}, [&]() -> int { ++calls; throw Error(ErrorCode::timeout, "slow"); },
                     sleeper);
        }) == ErrorCode::timeout);
  CHECK(calls == 2);
}

TEST_CASE("endpoint parsing") {
  const auto t = parse_endpoint("http://localhost:8080/v1/");
  CHECK(t.scheme_host_port == "http://localhost:8080");
  CHECK(t.path_prefix == "/v1");
  CHECK(parse_endpoint("https://example.org").path_prefix.empty());
  CHECK(code_of([] { parse_endpoint("ftp://x"); }) == ErrorCode::config);
}

TEST_CASE("http status mapping") {
  FakeService svc;
  const auto target = parse_endpoint(svc.endpoint());
  CHECK(code_of([&] { post_json(target, "/bad-request", json::object(), quick()); }) ==
        ErrorCode::service_error);
  CHECK(code_of([&] { post_json(target, "/not-json", json::object(), quick()); }) ==
        ErrorCode::contract_violation);
  svc.fail_first = 100;
  int attempts = 0;
  auto opts = quick();
  opts.retry.max_retries = 2;
  CHECK(code_of([&] { post_json(target, "/chat", json::object(), opts, &attempts); }) ==
        ErrorCode::backend_unavailable);
  CHECK(attempts == 3);
}

TEST_CASE("connection refused is unavailable") {
  // Nothing listens on the privileged port 1 in the test environment.
  const int port = 1;
  auto opts = quick();
  opts.retry.max_retries = 0;
  const auto target = parse_endpoint("http://127.0.0.1:" + std::to_string(port));
  CHECK(code_of([&] { post_json(target, "/chat", json::object(), opts); }) == ErrorCode::backend_unavailable);
}

TEST_CASE("http chat backend recovers after transient failures") {
  FakeService svc;
  svc.fail_first = 1;
  ChatBackendSpec spec;
  spec.endpoint = svc.endpoint();
  spec.model_name = "m";
  spec.timeout = 2000ms;
  HttpChatBackend chat(spec, [](std::chrono::milliseconds) {});
  CHECK(chat_complete(chat, "hello") == "echo hello");
  CHECK(chat.last_attempts() == 2);
}

TEST_CASE("chat spec validation and budget") {
  ChatBackendSpec spec;
  spec.max_input_tokens = 100;
  CHECK(code_of([&] { spec.validate(); }) == ErrorCode::config);
  MockChatBackend small(0, 4);
  CHECK(code_of([&] { chat_complete(small, "one two three four five"); }) == ErrorCode::over_budget);
}

TEST_CASE("embedding contract") {
  FakeService svc;
  EmbeddingBackendSpec spec;
  spec.endpoint = svc.endpoint();
  spec.model_name = "e";
  spec.dimension = 2;
  spec.timeout = 2000ms;
  HttpEmbedder embedder(spec);
  // The fake service returns a non-unit vector.
  const std::vector<std::string> one{"x"};
  CHECK(code_of([&] { embedder.embed(one); }) == ErrorCode::contract_violation);
  const std::vector<Vector> ok{{0.6, 0.8}};
  CHECK_NOTHROW(check_embeddings(ok, 1, 2));
  CHECK(code_of([&] { check_embeddings(ok, 2, 2); }) == ErrorCode::contract_violation);
  CHECK(code_of([&] { check_embeddings(ok, 1, 3); }) == ErrorCode::contract_violation);
}

TEST_CASE("remote classifier sends segments and a bearer token") {
  FakeService svc;
  ::setenv("STAMPSY_TEST_TOKEN", "secret", 1);
  RemoteClassifierSpec spec;
  spec.endpoint = svc.endpoint();
  spec.api_key_env = "STAMPSY_TEST_TOKEN";
  spec.timeout = 2000ms;
  RemoteClassifier rc(spec);
  const std::vector<std::string> segs{"a", "b"};
  const auto d = rc.predict(segs);
  CHECK(d[corpus::index_of(corpus::HelpingSkill::restatements)] == doctest::Approx(1.0));
  {
    std::lock_guard lock(svc.mu);
    CHECK(svc.last_auth == "Bearer secret");
  }
  ::unsetenv("STAMPSY_TEST_TOKEN");
  CHECK(token_from_env("STAMPSY_TEST_TOKEN").empty());
}

TEST_CASE("mock chat is deterministic and seed dependent") {
  MockChatBackend a(7), b(7), c(8);
  const std::string prompt = "line one\nline two";
  CHECK(chat_complete(a, prompt) == chat_complete(b, prompt));
  CHECK(chat_complete(a, prompt) != chat_complete(c, prompt));
  CHECK(chat_complete(a, prompt).find("] line two") != std::string::npos);
  const std::string answers = chat_complete(a, "Intro\n1. Explicit Content: what was said?\n2. Distortion: any?");
  CHECK(answers.find("1. Explicit Content: [mock") == 0);
  CHECK(answers.find("\n2. Distortion: [mock") != std::string::npos);
}

TEST_CASE("mock embedder returns unit vectors and ranks similar text higher") {
  MockEmbedder e(3, 32);
  const std::vector<std::string> texts{"I cannot sleep at night", "I can't sleep at night", "quarterly tax forms"};
  const auto v = e.embed(texts);
  CHECK_NOTHROW(check_embeddings(v, 3, 32));
  CHECK(e.embed_one(texts[0]) == v[0]);
  CHECK(embed_sim(e, texts[0], texts[1]) > embed_sim(e, texts[0], texts[2]));
  CHECK(embed_sim(e, texts[0], texts[0]) == doctest::Approx(1.0));
}

TEST_CASE("faulty backend injects scripted failures") {
  auto inner = std::make_shared<MockChatBackend>(1);
  FaultyChatBackend f(inner);
  f.fail_next({ErrorCode::timeout, ErrorCode::service_error});
  CHECK(code_of([&] { chat_complete(f, "x"); }) == ErrorCode::timeout);
  CHECK(code_of([&] { chat_complete(f, "x"); }) == ErrorCode::service_error);
  CHECK_NOTHROW(chat_complete(f, "x"));
  f.fail_always(true);
  CHECK_THROWS_AS(chat_complete(f, "x"), Error);
  CHECK(f.calls() == 4);
  FailingClassifier fc;
  const std::vector<std::string> segs{"x"};
  CHECK_THROWS_AS(fc.predict(segs), Error);
}
