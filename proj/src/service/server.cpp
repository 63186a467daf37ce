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


#include "stampsy/service/server.hpp"

#include <map>
#include <mutex>
#include <thread>
#include <utility>

#include <httplib.h>
#include <json.hpp>

#include "stampsy/common/error.hpp"
#include "stampsy/corpus/corpus_io.hpp"
#include "stampsy/corpus/stats.hpp"
#include "stampsy/eval/ghsc.hpp"
#include "stampsy/eval/metrics.hpp"

namespace stampsy::service {

namespace {

using nlohmann::json;

void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, std::string_view code,
                const std::string& message) {
  send_json(res, status, {{"error", {{"code", code}, {"message", message}}}});
}

json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  try {
    json j = json::parse(req.body);
    if (!j.is_object()) throw Error(ErrorCode::schema_violation, "request body must be an object");
    return j;
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::schema_violation, std::string("invalid JSON: ") + e.what());
  }
}

corpus::CaseConceptualization parse_ccm(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::schema_violation, "ccm must be an object");
  corpus::CaseConceptualization ccm;
  for (const auto& [key, value] : j.items()) {
    auto slot = corpus::ccm_slot_from_string(key);
    if (!slot) throw Error(ErrorCode::schema_violation, "ccm." + key + ": not a known slot");
    if (value.is_null()) continue;
    if (!value.is_string()) throw Error(ErrorCode::schema_violation, "ccm." + key + ": expected a string");
    ccm[*slot] = value.get<std::string>();
  }
  return ccm;
}

json events_json(const engine::EventLog& log) {
  json events = json::array();
  for (const auto& e : log.events()) events.push_back(engine::to_json(e));
  return events;
}

template <typename T>
T field(const json& body, const char* key) {
  try {
    return body.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::schema_violation, std::string("\"") + key + "\" is missing or mistyped");
  }
}

}  // namespace

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_found: return 404;
    case ErrorCode::lifecycle:
    case ErrorCode::conflict:
    case ErrorCode::duplicate: return 409;
    case ErrorCode::invalid_argument:
    case ErrorCode::schema_violation:
    case ErrorCode::length_mismatch:
    case ErrorCode::over_budget: return 422;
    case ErrorCode::backend_unavailable:
    case ErrorCode::timeout:
    case ErrorCode::service_error:
    case ErrorCode::contract_violation: return 502;
    case ErrorCode::config:
    case ErrorCode::budget_too_small: return 500;
  }
  return 500;
}

struct Server::Impl {
  struct Slot {
    std::mutex mu;
    std::optional<engine::Conversation> conversation;
  };

  std::shared_ptr<engine::Engine> engine;
  std::shared_ptr<engine::EventStore> store;
  ServerOptions options;
  httplib::Server http;
  std::thread worker;

  std::mutex sessions_mu;
  std::map<std::string, std::shared_ptr<Slot>> sessions;
  std::mutex open_mu;

  Impl(std::shared_ptr<engine::Engine> e, std::shared_ptr<engine::EventStore> s, ServerOptions o)
      : engine(std::move(e)), store(std::move(s)), options(std::move(o)) {
    if (!engine || !store) throw Error(ErrorCode::config, "server needs an engine and a store");
    routes();
  }

  std::shared_ptr<Slot> slot_for(const std::string& id) {
    std::lock_guard lock(sessions_mu);
    if (auto it = sessions.find(id); it != sessions.end()) return it->second;
    auto log = store->load(id);
    if (!log) throw Error(ErrorCode::not_found, "unknown session " + id);
    auto slot = std::make_shared<Slot>();
    slot->conversation = engine::rebuild_conversation(*log);
    sessions.emplace(id, slot);
    return slot;
  }

  void persist(const std::string& id, const engine::EventLog& log, std::size_t from) {
    for (std::size_t i = from; i < log.size(); ++i) store->append(id, log.events()[i]);
  }

  json open(const json& body) {
    std::optional<std::string> id;
    if (body.contains("session_id") && !body["session_id"].is_null()) {
      id = field<std::string>(body, "session_id");
    }
    std::optional<corpus::CaseConceptualization> ccm;
    if (body.contains("ccm") && !body["ccm"].is_null()) ccm = parse_ccm(body["ccm"]);

    std::lock_guard open_lock(open_mu);
    if (!id) id = engine->next_session_id();
    {
      std::lock_guard lock(sessions_mu);
      if (sessions.count(*id) != 0 || store->load(*id)) {
        throw Error(ErrorCode::duplicate, "session " + *id + " already exists");
      }
    }
    auto conversation = engine->open_session(*id, std::move(ccm));
    persist(*id, conversation.log, 0);
    const auto& opening = conversation.session.utterances().front();
    json out = {{"session_id", *id},
                {"status", corpus::to_string(conversation.session.status())},
                {"opening", corpus::to_json(opening)},
                {"last_sequence", conversation.log.size()}};
    auto slot = std::make_shared<Slot>();
    slot->conversation = std::move(conversation);
    std::lock_guard lock(sessions_mu);
    sessions.emplace(*id, std::move(slot));
    return out;
  }

  json turn(const std::string& id, const json& body) {
    const auto text = field<std::string>(body, "text");
    std::optional<corpus::GoalLabel> gold;
    if (body.contains("gold_skill") && !body["gold_skill"].is_null()) {
      const auto name = field<std::string>(body, "gold_skill");
      auto skill = corpus::parse_skill(name);
      if (!skill) throw Error(ErrorCode::schema_violation, "unknown skill '" + name + "'");
      gold = corpus::GoalLabel::of_skill(*skill);
    }
    auto slot = slot_for(id);
    std::lock_guard lock(slot->mu);
    auto& current = *slot->conversation;
    if (body.contains("expected_sequence") && !body["expected_sequence"].is_null()) {
      const auto expected = field<std::uint64_t>(body, "expected_sequence");
      if (expected != current.log.size()) {
        throw Error(ErrorCode::conflict, "expected_sequence " + std::to_string(expected) +
                                             " is stale; last is " +
                                             std::to_string(current.log.size()));
      }
    }
    engine::Conversation next = current;
    const auto result = engine->step(next, text, gold);
    persist(id, next.log, current.log.size());
    current = std::move(next);
    json out = engine::to_json(result);
    out["session_id"] = id;
    out["last_sequence"] = current.log.size();
    return out;
  }

  json close(const std::string& id) {
    auto slot = slot_for(id);
    std::lock_guard lock(slot->mu);
    auto& current = *slot->conversation;
    engine::Conversation next = current;
    const auto closing = engine->close_session(next);
    persist(id, next.log, current.log.size());
    current = std::move(next);
    return {{"session_id", id},
            {"status", corpus::to_string(current.session.status())},
            {"closing", corpus::to_json(closing)},
            {"last_sequence", current.log.size()}};
  }

  json log(const std::string& id) {
    auto slot = slot_for(id);
    std::lock_guard lock(slot->mu);
    const auto& c = *slot->conversation;
    return {{"session_id", id},
            {"status", corpus::to_string(c.session.status())},
            {"exchanges", c.exchanges},
            {"events", events_json(c.log)}};
  }

  json recordings(const std::string& id) {
    auto slot = slot_for(id);
    std::lock_guard lock(slot->mu);
    json out = json::array();
    for (const auto& r : slot->conversation->session.recordings()) out.push_back(corpus::to_json(r));
    return {{"session_id", id}, {"recordings", out}};
  }

  json eval_ghsc(const json& body) {
    const auto& transcript = eval::GhscTranscript::builtin();
    std::vector<corpus::HelpingSkill> predictions;
    if (body.contains("predictions")) {
      predictions = eval::predictions_from_json(body["predictions"]);
    } else {
      const bool use_context = body.value("use_context", engine->config().session.use_context);
      predictions = eval::predict_ghsc(transcript, *engine->backends().classifier, use_context);
    }
    json out = eval::to_json(eval::score_ghsc(transcript, predictions));
    out["others_baseline"] = eval::constant_baseline(transcript, corpus::HelpingSkill::others);
    return out;
  }

  json eval_gen(const json& body) {
    const auto& pairs_json = body.contains("pairs") ? body["pairs"] : json();
    if (!pairs_json.is_array() || pairs_json.empty()) {
      throw Error(ErrorCode::schema_violation, "\"pairs\" must be a non-empty array");
    }
    std::vector<eval::GenerationPair> pairs;
    for (const auto& p : pairs_json) pairs.push_back(eval::pair_from_json(p));
    const auto averaging = body.value("averaging", std::string("corpus"));
    if (averaging != "corpus" && averaging != "sentence") {
      throw Error(ErrorCode::schema_violation, "averaging must be corpus or sentence");
    }
    backends::Embedder* embedder = nullptr;
    if (body.value("embed", false)) {
      embedder = engine->backends().embedder.get();
      if (!embedder) throw Error(ErrorCode::config, "no embedding backend configured");
    }
    return eval::to_json(eval::evaluate_generation(pairs, embedder, averaging == "corpus"));
  }

  json corpus_stats(const httplib::Request& req) {
    if (!options.corpus_path) throw Error(ErrorCode::not_found, "no corpus configured");
    auto mode = text::TokenMode::mixed;
    if (req.has_param("tokens")) {
      try {
        mode = text::token_mode_from_string(req.get_param_value("tokens"));
      } catch (const Error& e) {
        throw Error(ErrorCode::schema_violation, e.what());
      }
    }
    const auto loaded = corpus::load_corpus(*options.corpus_path);
    json out = corpus::to_json(corpus::corpus_stats(loaded.sessions, mode));
    out["rejected_records"] = loaded.errors.size();
    return out;
  }

  template <typename F>
  httplib::Server::Handler wrap(int ok_status, F f) {
    return [ok_status, f = std::move(f)](const httplib::Request& req, httplib::Response& res) {
      try {
        send_json(res, ok_status, f(req));
      } catch (const Error& e) {
        send_error(res, http_status(e.code()), to_string(e.code()), e.what());
      } catch (const std::exception& e) {
        send_error(res, 500, "internal", e.what());
      }
    };
  }

  void routes() {
    http.set_default_headers({{"Access-Control-Allow-Origin", options.cors_origin},
                              {"Access-Control-Allow-Headers", "Content-Type, Authorization"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
    http.set_pre_routing_handler([this](const httplib::Request& req, httplib::Response& res) {
      if (options.api_token.empty() || req.method == "OPTIONS" || req.path == "/health") {
        return httplib::Server::HandlerResponse::Unhandled;
      }
      if (req.get_header_value("Authorization") != "Bearer " + options.api_token) {
        send_error(res, 401, "unauthorized", "missing or wrong bearer token");
        return httplib::Server::HandlerResponse::Handled;
      }
      return httplib::Server::HandlerResponse::Unhandled;
    });
    http.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

    const std::string id = R"(/sessions/([A-Za-z0-9_-]+))";
    http.Get("/health", wrap(200, [](const httplib::Request&) { return json{{"ok", true}}; }));
    http.Post("/sessions", wrap(201, [this](const httplib::Request& req) {
                return open(parse_body(req));
              }));
    http.Post(id + "/turns", wrap(200, [this](const httplib::Request& req) {
                return turn(req.matches[1], parse_body(req));
              }));
    http.Post(id + "/close",
              wrap(200, [this](const httplib::Request& req) { return close(req.matches[1]); }));
    http.Get(id + "/recordings",
             wrap(200, [this](const httplib::Request& req) { return recordings(req.matches[1]); }));
    http.Get(id, wrap(200, [this](const httplib::Request& req) { return log(req.matches[1]); }));
    http.Post("/eval/ghsc", wrap(200, [this](const httplib::Request& req) {
                return eval_ghsc(parse_body(req));
              }));
    http.Post("/eval/gen", wrap(200, [this](const httplib::Request& req) {
                return eval_gen(parse_body(req));
              }));
    http.Get("/corpus/stats",
             wrap(200, [this](const httplib::Request& req) { return corpus_stats(req); }));
    http.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
      if (res.status == 404 && res.body.empty()) {
        send_error(res, 404, "not_found", "no route for " + req.method + " " + req.path);
      }
    });
  }
};

Server::Server(std::shared_ptr<engine::Engine> engine, std::shared_ptr<engine::EventStore> store,
               ServerOptions options)
    : impl_(std::make_unique<Impl>(std::move(engine), std::move(store), std::move(options))) {}

Server::~Server() { stop(); }

int Server::start(const std::string& host, int port) {
  int bound = port;
  if (port == 0) {
    bound = impl_->http.bind_to_any_port(host);
  } else if (!impl_->http.bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound <= 0) {
    throw Error(ErrorCode::service_error, "cannot bind " + host + ":" + std::to_string(port));
  }
  impl_->worker = std::thread([this] { impl_->http.listen_after_bind(); });
  impl_->http.wait_until_ready();
  return bound;
}

void Server::run(const std::string& host, int port) {
  if (!impl_->http.listen(host, port)) {
    throw Error(ErrorCode::service_error, "cannot listen on " + host + ":" + std::to_string(port));
  }
}

void Server::stop() {
  if (!impl_) return;
  impl_->http.stop();
  if (impl_->worker.joinable()) impl_->worker.join();
}

}  // namespace stampsy::service
