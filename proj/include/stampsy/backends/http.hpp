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

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stampsy/backends/chat.hpp"
#include "stampsy/backends/embed.hpp"
#include "stampsy/skills/classify.hpp"
#include "stampsy/stsp/stamp.hpp"

// JSON-over-HTTP clients for remote model services.
//
//   POST <endpoint>/chat     {"model", "messages": [{"role", "content"}]} -> {"content"}
//   POST <endpoint>/embed    {"model", "texts": [...]}                   -> {"vectors": [[...]]}
//   POST <endpoint>/classify {"segments": [...]}                         -> {"probabilities": {skill: p}}
//   POST <endpoint>/train    {"config": {...}, "examples": [...]}        -> {"status"}
//   POST <endpoint>/stamp    {"state": {...}, "context": [...]}          -> {"text"}
//
// Connection failures, 5xx and 429 map to backend_unavailable and are
// retried; other statuses map to service_error; malformed bodies map to
// contract_violation.
namespace stampsy::backends {

struct HttpTarget {
  std::string scheme_host_port;  // http://host:port
  std::string path_prefix;       // "" or "/v1"
};

// Throws config on anything but an http:// or https:// URL.
HttpTarget parse_endpoint(const std::string& endpoint);

struct HttpOptions {
  std::chrono::milliseconds timeout{30000};
  RetryPolicy retry;
  std::string bearer_token;
  Sleeper sleeper = real_sleeper();
};

// One JSON POST with retries. `attempts` receives the number of requests made.
nlohmann::json post_json(const HttpTarget& target, const std::string& path,
                         const nlohmann::json& body, const HttpOptions& options,
                         int* attempts = nullptr);

// Reads the token from the named environment variable; empty when unset.
std::string token_from_env(const std::string& variable);

class HttpChatBackend final : public ChatBackend {
 public:
  explicit HttpChatBackend(ChatBackendSpec spec, Sleeper sleeper = real_sleeper());

  std::string name() const override { return "http:" + spec_.model_name; }
  std::size_t max_input_tokens() const override { return spec_.max_input_tokens; }
  std::string complete(std::span<const ChatMessage> messages) override;
  int last_attempts() const { return last_attempts_; }

 private:
  ChatBackendSpec spec_;
  HttpTarget target_;
  HttpOptions options_;
  int last_attempts_ = 0;
};

class HttpEmbedder final : public Embedder {
 public:
  explicit HttpEmbedder(EmbeddingBackendSpec spec);

  std::string name() const override { return "http:" + spec_.model_name; }
  std::size_t dimension() const override { return spec_.dimension; }
  std::vector<Vector> embed(std::span<const std::string> texts) override;

 private:
  EmbeddingBackendSpec spec_;
  HttpTarget target_;
  HttpOptions options_;
};

// Optimizer settings forwarded to a trainable remote encoder.
struct TrainingConfig {
  int batch_size = 128;
  double learning_rate = 0.001;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  int epochs = 3;
  bool use_context = true;
};

nlohmann::json to_json(const TrainingConfig& c);

struct RemoteClassifierSpec {
  std::string endpoint;
  std::size_t max_input_tokens = 512;
  std::chrono::milliseconds timeout{30000};
  RetryPolicy retry;
  std::string api_key_env;
};

class RemoteClassifier final : public skills::ClassifierBackend {
 public:
  explicit RemoteClassifier(RemoteClassifierSpec spec);

  std::string name() const override { return "remote:" + spec_.endpoint; }
  std::size_t max_input_tokens() const override { return spec_.max_input_tokens; }
  skills::Distribution predict(std::span<const std::string> segments) override;

  // Each example is (context segments, gold skill).
  nlohmann::json train(
      const std::vector<std::pair<std::vector<std::string>, corpus::HelpingSkill>>& examples,
      const TrainingConfig& config);

 private:
  RemoteClassifierSpec spec_;
  HttpTarget target_;
  HttpOptions options_;
};

// Learned stamp generation served remotely.
class HttpStampGenerator final : public stsp::StampGenerator {
 public:
  HttpStampGenerator(std::string endpoint, HttpOptions options);

  std::string name() const override { return "http"; }
  stsp::Stamp generate(const stsp::SpatioTemporalState& state,
                       std::span<const std::string> context) override;

 private:
  HttpTarget target_;
  HttpOptions options_;
};

}  // namespace stampsy::backends
