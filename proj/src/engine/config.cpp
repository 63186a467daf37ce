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


#include "stampsy/engine/config.hpp"

#include <fstream>
#include <functional>
#include <set>

#include <CLI11.hpp>

#include "stampsy/backends/http.hpp"
#include "stampsy/backends/mock.hpp"
#include "stampsy/common/error.hpp"
#include "stampsy/common/text.hpp"
#include "stampsy/embedded/case_recording_txt.hpp"
#include "stampsy/embedded/closing_txt.hpp"
#include "stampsy/embedded/opening_txt.hpp"
#include "stampsy/embedded/preamble_txt.hpp"
#include "stampsy/embedded/warning_txt.hpp"

namespace stampsy::engine {

namespace {

using Values = std::map<std::string, std::vector<std::string>>;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::config, "cannot read " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string strip_trailing_newlines(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

class Reader {
 public:
  Reader(Values values, std::filesystem::path base) : values_(std::move(values)), base_(std::move(base)) {}

  const std::vector<std::string>* find(const std::string& key) {
    auto it = values_.find(key);
    if (it == values_.end()) return nullptr;
    used_.insert(key);
    return &it->second;
  }

  std::optional<std::string> str(const std::string& key) {
    const auto* v = find(key);
    if (!v) return std::nullopt;
    if (v->size() != 1) throw Error(ErrorCode::config, key + ": expected a single value");
    return v->front();
  }

  template <typename Int>
  void integer(const std::string& key, Int& out) {
    if (auto s = str(key)) {
      try {
        std::size_t pos = 0;
        const long long v = std::stoll(*s, &pos);
        if (pos != s->size()) throw std::invalid_argument(*s);
        out = static_cast<Int>(v);
      } catch (const std::exception&) {
        throw Error(ErrorCode::config, key + ": expected an integer, got '" + *s + "'");
      }
    }
  }

  void milliseconds(const std::string& key, std::chrono::milliseconds& out) {
    long long ms = out.count();
    integer(key, ms);
    out = std::chrono::milliseconds(ms);
  }

  void boolean(const std::string& key, bool& out) {
    if (auto s = str(key)) {
      const std::string v = text::ascii_lower(*s);
      if (v == "true" || v == "1" || v == "yes" || v == "on") {
        out = true;
      } else if (v == "false" || v == "0" || v == "no" || v == "off") {
        out = false;
      } else {
        throw Error(ErrorCode::config, key + ": expected true or false, got '" + *s + "'");
      }
    }
  }

  void string(const std::string& key, std::string& out) {
    if (auto s = str(key)) out = *s;
  }

  void list(const std::string& key, std::vector<std::string>& out) {
    if (const auto* v = find(key)) out = *v;
  }

  std::optional<std::string> path(const std::string& key) {
    auto s = str(key);
    if (!s || s->empty()) return std::nullopt;
    std::filesystem::path p(*s);
    if (p.is_relative() && !base_.empty()) p = base_ / p;
    return p.string();
  }

  void text_file(const std::string& key, std::string& out) {
    if (auto p = path(key)) out = strip_trailing_newlines(read_file(*p));
  }

  void unknown_keys_check() const {
    for (const auto& [key, _] : values_) {
      if (!used_.count(key)) throw Error(ErrorCode::config, "unknown config key '" + key + "'");
    }
  }

 private:
  Values values_;
  std::filesystem::path base_;
  std::set<std::string> used_;
};

void read_backend(Reader& r, const std::string& section, BackendSettings& b) {
  r.string(section + ".kind", b.kind);
  r.string(section + ".endpoint", b.endpoint);
  r.string(section + ".model", b.model);
  r.integer(section + ".max_input_tokens", b.max_input_tokens);
  r.milliseconds(section + ".timeout_ms", b.timeout);
  r.integer(section + ".max_retries", b.max_retries);
  r.milliseconds(section + ".backoff_ms", b.backoff);
  r.string(section + ".api_key_env", b.api_key_env);
  r.integer(section + ".dimension", b.dimension);
  r.integer(section + ".seed", b.seed);
}

backends::RetryPolicy retry_of(const BackendSettings& b) {
  backends::RetryPolicy p;
  p.max_retries = b.max_retries;
  p.backoff = b.backoff;
  return p;
}

void require_kind(const std::string& section, const std::string& kind,
                  std::initializer_list<std::string_view> allowed) {
  for (auto a : allowed) {
    if (kind == a) return;
  }
  throw Error(ErrorCode::config, section + ".kind: unsupported value '" + kind + "'");
}

}  // namespace

Templates builtin_templates() {
  Templates t;
  t.preamble = strip_trailing_newlines(std::string(embedded::preamble_txt));
  t.opening = strip_trailing_newlines(std::string(embedded::opening_txt));
  t.closing = strip_trailing_newlines(std::string(embedded::closing_txt));
  t.warning = strip_trailing_newlines(std::string(embedded::warning_txt));
  t.case_recording = strip_trailing_newlines(std::string(embedded::case_recording_txt));
  return t;
}

void StampsyConfig::validate() const {
  if (session.max_turns < 2) throw Error(ErrorCode::config, "session.max_turns must be at least 2");
  if (session.warn_margin < 1 || session.warn_margin >= session.max_turns) {
    throw Error(ErrorCode::config, "session.warn_margin must be in [1, max_turns)");
  }
  if (session.time_budget_s < 0) throw Error(ErrorCode::config, "session.time_budget_s < 0");
  if (session.time_budget_s > 0 &&
      (session.warn_before_s <= 0 || session.warn_before_s >= session.time_budget_s)) {
    throw Error(ErrorCode::config, "session.warn_before_s must be in (0, time_budget_s)");
  }
  if (retrieval.k < 1) throw Error(ErrorCode::config, "retrieval.k must be at least 1");
  if (retrieval.scorer != "bigram" && retrieval.scorer != "embedding") {
    throw Error(ErrorCode::config, "retrieval.scorer must be bigram or embedding");
  }
  if (retrieval.scorer == "embedding" && embedding.kind == "none") {
    throw Error(ErrorCode::config, "retrieval.scorer = embedding needs an [embedding] backend");
  }
  for (const auto* t : {&templates.preamble, &templates.opening, &templates.closing,
                        &templates.case_recording}) {
    if (text::trim(*t).empty()) throw Error(ErrorCode::config, "a prompt template is empty");
  }
  require_kind("chat", chat.kind, {"mock", "http"});
  require_kind("classifier", classifier.kind, {"keyword", "remote"});
  require_kind("embedding", embedding.kind, {"none", "mock", "http"});
  require_kind("stamp", stamp.kind, {"template", "http"});
  for (const auto* b : {&chat, &classifier, &embedding, &stamp}) {
    if (b->max_retries < 0) throw Error(ErrorCode::config, "max_retries must be >= 0");
  }
  if (chat.kind == "mock" && chat.max_input_tokens != 0 && chat.max_input_tokens < 512) {
    throw Error(ErrorCode::config, "chat.max_input_tokens must be at least 512");
  }
  if (service.port < 0 || service.port > 65535) {
    throw Error(ErrorCode::config, "service.port out of range");
  }
}

StampsyConfig parse_config(std::istream& in, const std::filesystem::path& base_dir) {
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigTOML().from_config(in);
  } catch (const CLI::Error& e) {
    throw Error(ErrorCode::config, std::string("config syntax: ") + e.what());
  }
  Values values;
  for (const auto& item : items) {
    if (item.name == "--" || item.name == "++") continue;
    std::vector<std::string> parents;
    for (const auto& p : item.parents) {
      if (p != "default") parents.push_back(p);
    }
    parents.push_back(item.name);
    std::string key;
    for (const auto& p : parents) key += (key.empty() ? "" : ".") + p;
    values[key] = item.inputs;
  }

  Reader r(std::move(values), base_dir);
  StampsyConfig c;
  auto& s = c.session;
  r.integer("session.max_turns", s.max_turns);
  r.integer("session.warn_margin", s.warn_margin);
  r.integer("session.time_budget_s", s.time_budget_s);
  r.integer("session.warn_before_s", s.warn_before_s);
  r.boolean("session.farewell_rule", s.farewell_rule);
  r.list("session.farewell_patterns", s.farewell_patterns);
  r.boolean("session.use_context", s.use_context);
  r.boolean("session.gold_injection", s.gold_injection);
  r.boolean("session.case_recordings", s.case_recordings);
  r.boolean("session.reflect_in_context", s.reflect_in_context);
  r.integer("session.seed", s.seed);

  auto& t = c.templates;
  r.text_file("templates.preamble", t.preamble);
  r.text_file("templates.opening", t.opening);
  r.text_file("templates.closing", t.closing);
  r.text_file("templates.warning", t.warning);
  r.text_file("templates.case_recording", t.case_recording);
  t.instructions_path = r.path("templates.instructions");
  t.stsp_rules_path = r.path("templates.stsp_rules");
  t.skill_keywords_path = r.path("templates.skill_keywords");

  auto& rt = c.retrieval;
  r.integer("retrieval.k", rt.k);
  r.string("retrieval.scorer", rt.scorer);
  r.boolean("retrieval.always_inject_persona", rt.always_inject_persona);
  rt.quads_path = r.path("retrieval.quads");
  rt.graph_path = r.path("retrieval.graph");

  read_backend(r, "chat", c.chat);
  read_backend(r, "classifier", c.classifier);
  read_backend(r, "embedding", c.embedding);
  read_backend(r, "stamp", c.stamp);

  r.string("service.bind", c.service.bind);
  r.integer("service.port", c.service.port);
  if (auto p = r.path("service.storage_dir")) c.service.storage_dir = *p;
  r.string("service.api_token_env", c.service.api_token_env);
  r.string("service.cors_origin", c.service.cors_origin);

  r.unknown_keys_check();
  c.validate();
  return c;
}

StampsyConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::not_found, "cannot open config file " + path.string());
  return parse_config(in, path.parent_path());
}

Backends build_backends(const StampsyConfig& config, std::optional<std::uint64_t> seed_override) {
  config.validate();
  Backends b;
  const auto& chat = config.chat;
  if (chat.kind == "mock") {
    const std::size_t budget = chat.max_input_tokens ? chat.max_input_tokens : 32768;
    b.chat = std::make_shared<backends::MockChatBackend>(seed_override.value_or(chat.seed), budget);
  } else {
    backends::ChatBackendSpec spec;
    spec.endpoint = chat.endpoint;
    spec.model_name = chat.model;
    if (chat.max_input_tokens) spec.max_input_tokens = chat.max_input_tokens;
    spec.timeout = chat.timeout;
    spec.retry = retry_of(chat);
    spec.api_key_env = chat.api_key_env;
    b.chat = std::make_shared<backends::HttpChatBackend>(spec);
  }

  if (config.templates.skill_keywords_path) {
    std::ifstream in(*config.templates.skill_keywords_path);
    if (!in) throw Error(ErrorCode::config, "cannot read " + *config.templates.skill_keywords_path);
    b.fallback = std::make_shared<skills::KeywordClassifier>(
        skills::KeywordClassifier::from_json(nlohmann::json::parse(in)));
  } else {
    b.fallback = std::make_shared<skills::KeywordClassifier>(skills::KeywordClassifier::builtin());
  }
  if (config.classifier.kind == "remote") {
    backends::RemoteClassifierSpec spec;
    spec.endpoint = config.classifier.endpoint;
    if (config.classifier.max_input_tokens) spec.max_input_tokens = config.classifier.max_input_tokens;
    spec.timeout = config.classifier.timeout;
    spec.retry = retry_of(config.classifier);
    spec.api_key_env = config.classifier.api_key_env;
    b.classifier = std::make_shared<backends::RemoteClassifier>(spec);
  } else {
    b.classifier = b.fallback;
  }

  const auto& emb = config.embedding;
  if (emb.kind == "mock") {
    b.embedder = std::make_shared<backends::MockEmbedder>(seed_override.value_or(emb.seed),
                                                          emb.dimension);
  } else if (emb.kind == "http") {
    backends::EmbeddingBackendSpec spec;
    spec.endpoint = emb.endpoint;
    spec.model_name = emb.model;
    spec.dimension = emb.dimension;
    spec.timeout = emb.timeout;
    spec.retry = retry_of(emb);
    spec.api_key_env = emb.api_key_env;
    b.embedder = std::make_shared<backends::HttpEmbedder>(spec);
  }
  if (config.retrieval.scorer == "embedding") {
    b.scorer = std::make_shared<kstore::EmbeddingScorer>(b.embedder);
  } else {
    b.scorer = std::make_shared<kstore::BigramScorer>();
  }

  if (config.stamp.kind == "http") {
    backends::HttpOptions options;
    options.timeout = config.stamp.timeout;
    options.retry = retry_of(config.stamp);
    options.bearer_token = backends::token_from_env(config.stamp.api_key_env);
    b.stamp = std::make_shared<backends::HttpStampGenerator>(config.stamp.endpoint, options);
  } else {
    b.stamp = std::make_shared<stsp::TemplateStampGenerator>();
  }

  auto store = std::make_shared<kstore::KnowledgeStore>();
  if (config.retrieval.quads_path) store->ingest(kstore::load_quads(*config.retrieval.quads_path));
  b.knowledge = store;
  if (config.retrieval.graph_path) {
    b.graph = std::make_shared<kstore::KnowledgeGraph>(kstore::load_graph(*config.retrieval.graph_path));
  }

  if (config.templates.instructions_path) {
    b.instructions = std::make_shared<skills::InstructionTemplates>(
        skills::InstructionTemplates::load(*config.templates.instructions_path));
  } else {
    b.instructions = std::shared_ptr<const skills::InstructionTemplates>(
        &skills::InstructionTemplates::builtin(), [](const skills::InstructionTemplates*) {});
  }
  if (config.templates.stsp_rules_path) {
    b.rules = std::make_shared<stsp::RuleTable>(stsp::RuleTable::load(*config.templates.stsp_rules_path));
  } else {
    b.rules = std::shared_ptr<const stsp::RuleTable>(&stsp::RuleTable::builtin(),
                                                     [](const stsp::RuleTable*) {});
  }
  return b;
}

}  // namespace stampsy::engine
