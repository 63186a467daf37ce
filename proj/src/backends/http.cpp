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

#include "stampsy/backends/http.hpp"

#include <cstdlib>

#include <httplib.h>

#include "stampsy/common/error.hpp"
#include "stampsy/common/text.hpp"

namespace stampsy::backends {

namespace {

using nlohmann::json;

nlohmann::json post_once(const HttpTarget& target, const std::string& path, const std::string& body,
                         const HttpOptions& options) {
  httplib::Client client(target.scheme_host_port);
  client.set_connection_timeout(options.timeout);
  client.set_read_timeout(options.timeout);
  client.set_write_timeout(options.timeout);
  if (!options.bearer_token.empty()) client.set_bearer_token_auth(options.bearer_token);
  const std::string full = target.path_prefix + path;
  auto res = client.Post(full, body, "application/json");
  if (!res) {
    const auto err = res.error();
    const std::string what = httplib::to_string(err);
    if (err == httplib::Error::Read || err == httplib::Error::Write ||
        err == httplib::Error::ConnectionTimeout) {
      throw Error(ErrorCode::timeout, "POST " + full + ": " + what);
    }
    throw Error(ErrorCode::backend_unavailable, "POST " + full + ": " + what);
  }
  if (res->status >= 500 || res->status == 429) {
    throw Error(ErrorCode::backend_unavailable,
                "POST " + full + ": HTTP " + std::to_string(res->status));
  }
  if (res->status < 200 || res->status >= 300) {
    throw Error(ErrorCode::service_error,
                "POST " + full + ": HTTP " + std::to_string(res->status) + " " + res->body);
  }
  try {
    return json::parse(res->body);
  } catch (const json::parse_error&) {
    throw Error(ErrorCode::contract_violation, "POST " + full + ": response is not JSON");
  }
}

}  // namespace

HttpTarget parse_endpoint(const std::string& endpoint) {
  const auto scheme_end = endpoint.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorCode::config, "endpoint '" + endpoint + "' has no scheme");
  }
  const std::string scheme = endpoint.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw Error(ErrorCode::config, "endpoint '" + endpoint + "' is not http(s)");
  }
  const auto path_start = endpoint.find('/', scheme_end + 3);
  HttpTarget t;
  t.scheme_host_port = endpoint.substr(0, path_start);
  if (path_start != std::string::npos) {
    t.path_prefix = endpoint.substr(path_start);
    while (!t.path_prefix.empty() && t.path_prefix.back() == '/') t.path_prefix.pop_back();
  }
  return t;
}

std::string token_from_env(const std::string& variable) {
  if (variable.empty()) return {};
  const char* v = std::getenv(variable.c_str());
  return v ? std::string(v) : std::string();
}

nlohmann::json post_json(const HttpTarget& target, const std::string& path,
                         const nlohmann::json& body, const HttpOptions& options, int* attempts) {
  const std::string payload = body.dump();
  return with_retry(
      options.retry, [&] { return post_once(target, path, payload, options); }, options.sleeper,
      attempts);
}

HttpChatBackend::HttpChatBackend(ChatBackendSpec spec, Sleeper sleeper)
    : spec_(std::move(spec)), target_(parse_endpoint(spec_.endpoint)) {
  spec_.validate();
  options_.timeout = spec_.timeout;
  options_.retry = spec_.retry;
  options_.bearer_token = token_from_env(spec_.api_key_env);
  options_.sleeper = std::move(sleeper);
}

std::string HttpChatBackend::complete(std::span<const ChatMessage> messages) {
  check_budget(*this, messages);
  const json body = {{"model", spec_.model_name}, {"messages", to_json(messages)}};
  const json reply = post_json(target_, "/chat", body, options_, &last_attempts_);
  if (!reply.is_object() || !reply.contains("content") || !reply["content"].is_string()) {
    throw Error(ErrorCode::contract_violation, "chat reply has no string 'content'");
  }
  std::string content = reply["content"].get<std::string>();
  if (text::trim(content).empty()) {
    throw Error(ErrorCode::contract_violation, "chat reply is empty");
  }
  return content;
}

HttpEmbedder::HttpEmbedder(EmbeddingBackendSpec spec)
    : spec_(std::move(spec)), target_(parse_endpoint(spec_.endpoint)) {
  spec_.validate();
  options_.timeout = spec_.timeout;
  options_.retry = spec_.retry;
  options_.bearer_token = token_from_env(spec_.api_key_env);
}

std::vector<Vector> HttpEmbedder::embed(std::span<const std::string> texts) {
  if (texts.empty()) throw Error(ErrorCode::invalid_argument, "nothing to embed");
  const json body = {{"model", spec_.model_name},
                     {"texts", std::vector<std::string>(texts.begin(), texts.end())}};
  const json reply = post_json(target_, "/embed", body, options_);
  std::vector<Vector> vectors;
  try {
    vectors = reply.at("vectors").get<std::vector<Vector>>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::contract_violation, "embed reply has no numeric 'vectors'");
  }
  check_embeddings(vectors, texts.size(), spec_.dimension);
  return vectors;
}

nlohmann::json to_json(const TrainingConfig& c) {
  return {{"batch_size", c.batch_size}, {"optimizer", "adam"},
          {"learning_rate", c.learning_rate}, {"beta1", c.beta1},
          {"beta2", c.beta2}, {"epsilon", c.epsilon},
          {"epochs", c.epochs}, {"use_context", c.use_context},
          {"loss", "cross_entropy"}};
}

RemoteClassifier::RemoteClassifier(RemoteClassifierSpec spec)
    : spec_(std::move(spec)), target_(parse_endpoint(spec_.endpoint)) {
  options_.timeout = spec_.timeout;
  options_.retry = spec_.retry;
  options_.bearer_token = token_from_env(spec_.api_key_env);
}

skills::Distribution RemoteClassifier::predict(std::span<const std::string> segments) {
  const json body = {{"segments", std::vector<std::string>(segments.begin(), segments.end())}};
  const json reply = post_json(target_, "/classify", body, options_);
  if (!reply.is_object() || !reply.contains("probabilities")) {
    throw Error(ErrorCode::contract_violation, "classifier reply has no 'probabilities'");
  }
  skills::Distribution p = skills::distribution_from_json(reply["probabilities"]);
  skills::check_distribution(p);
  return p;
}

nlohmann::json RemoteClassifier::train(
    const std::vector<std::pair<std::vector<std::string>, corpus::HelpingSkill>>& examples,
    const TrainingConfig& config) {
  json items = json::array();
  for (const auto& [segments, skill] : examples) {
    items.push_back({{"segments", segments}, {"label", to_string(skill)}});
  }
  return post_json(target_, "/train", {{"config", to_json(config)}, {"examples", items}}, options_);
}

HttpStampGenerator::HttpStampGenerator(std::string endpoint, HttpOptions options)
    : target_(parse_endpoint(endpoint)), options_(std::move(options)) {}

stsp::Stamp HttpStampGenerator::generate(const stsp::SpatioTemporalState& state,
                                         std::span<const std::string> context) {
  const json body = {{"state", stsp::to_json(state, false)},
                     {"context", std::vector<std::string>(context.begin(), context.end())}};
  const json reply = post_json(target_, "/stamp", body, options_);
  if (!reply.is_object() || !reply.contains("text") || !reply["text"].is_string()) {
    throw Error(ErrorCode::contract_violation, "stamp reply has no string 'text'");
  }
  stsp::Stamp stamp;
  stamp.text = reply["text"].get<std::string>();
  for (stsp::Field f : stsp::kFields) {
    if (auto k = state.key(f)) stamp.sources.push_back(*k);
  }
  return stamp;
}

}  // namespace stampsy::backends
