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

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stampsy/backends/chat.hpp"
#include "stampsy/backends/embed.hpp"
#include "stampsy/kstore/graph.hpp"
#include "stampsy/kstore/scorer.hpp"
#include "stampsy/kstore/store.hpp"
#include "stampsy/skills/classify.hpp"
#include "stampsy/skills/instruction.hpp"
#include "stampsy/stsp/rules.hpp"
#include "stampsy/stsp/stamp.hpp"

// TOML configuration. Every key is optional; relative paths resolve against
// the directory of the config file.
//
//   [session]    max_turns, warn_margin, time_budget_s, warn_before_s,
//                farewell_rule, farewell_patterns, use_context, gold_injection,
//                case_recordings, reflect_in_context, seed
//   [templates]  preamble, opening, closing, warning, case_recording,
//                instructions, stsp_rules, skill_keywords
//   [retrieval]  k, scorer ("bigram" | "embedding"), always_inject_persona,
//                quads, graph
//   [chat]       kind ("mock" | "http"), endpoint, model, max_input_tokens,
//                timeout_ms, max_retries, backoff_ms, api_key_env, seed
//   [classifier] kind ("keyword" | "remote"), endpoint, max_input_tokens,
//                timeout_ms, max_retries, backoff_ms, api_key_env
//   [embedding]  kind ("none" | "mock" | "http"), endpoint, model, dimension,
//                timeout_ms, max_retries, api_key_env, seed
//   [stamp]      kind ("template" | "http"), endpoint, timeout_ms, api_key_env
//   [service]    bind, port, storage_dir, api_token_env, cors_origin
namespace stampsy::engine {

struct SessionSettings {
  int max_turns = 20;
  int warn_margin = 2;
  // Wall-clock budget; 0 disables. Warning comes warn_before_s ahead of it.
  int time_budget_s = 0;
  int warn_before_s = 300;
  bool farewell_rule = true;
  std::vector<std::string> farewell_patterns = {"goodbye", "bye", "再见", "拜拜"};
  bool use_context = true;
  bool gold_injection = false;
  bool case_recordings = true;
  bool reflect_in_context = true;
  std::uint64_t seed = 0;
};

struct Templates {
  std::string preamble;
  std::string opening;
  std::string closing;
  std::string warning;
  std::string case_recording;
  std::optional<std::string> instructions_path;
  std::optional<std::string> stsp_rules_path;
  std::optional<std::string> skill_keywords_path;
};

// The shipped prompt texts.
Templates builtin_templates();

struct RetrievalSettings {
  std::size_t k = 5;
  std::string scorer = "bigram";
  bool always_inject_persona = false;
  std::optional<std::string> quads_path;
  std::optional<std::string> graph_path;
};

struct BackendSettings {
  std::string kind{};
  std::string endpoint{};
  std::string model{};
  std::size_t max_input_tokens = 0;  // 0: backend default
  std::chrono::milliseconds timeout{30000};
  int max_retries = 2;
  std::chrono::milliseconds backoff{200};
  std::string api_key_env{};
  std::size_t dimension = 64;
  std::uint64_t seed = 0;
};

struct ServiceSettings {
  std::string bind = "127.0.0.1";
  int port = 8080;
  std::string storage_dir;  // empty: in-memory
  std::string api_token_env;
  std::string cors_origin = "*";
};

struct StampsyConfig {
  SessionSettings session;
  Templates templates = builtin_templates();
  RetrievalSettings retrieval;
  BackendSettings chat{.kind = "mock"};
  BackendSettings classifier{.kind = "keyword"};
  BackendSettings embedding{.kind = "none"};
  BackendSettings stamp{.kind = "template"};
  ServiceSettings service;

  // Throws config with the offending key.
  void validate() const;
};

StampsyConfig parse_config(std::istream& in, const std::filesystem::path& base_dir = {});
StampsyConfig load_config(const std::filesystem::path& path);

// Concrete collaborators built from a config.
struct Backends {
  std::shared_ptr<backends::ChatBackend> chat;
  // Defaults to chat when null.
  std::shared_ptr<backends::ChatBackend> recorder;
  std::shared_ptr<skills::ClassifierBackend> classifier;
  // Answers when the classifier fails; the keyword baseline by default.
  std::shared_ptr<skills::ClassifierBackend> fallback;
  std::shared_ptr<stsp::StampGenerator> stamp;
  std::shared_ptr<backends::Embedder> embedder;
  std::shared_ptr<const kstore::Scorer> scorer;
  std::shared_ptr<const kstore::KnowledgeStore> knowledge;
  std::shared_ptr<const kstore::KnowledgeGraph> graph;
  std::shared_ptr<const skills::InstructionTemplates> instructions;
  std::shared_ptr<const stsp::RuleTable> rules;
};

// `seed_override` replaces every mock seed (the CLI's --seed).
Backends build_backends(const StampsyConfig& config,
                        std::optional<std::uint64_t> seed_override = std::nullopt);

}  // namespace stampsy::engine
