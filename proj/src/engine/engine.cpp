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


#include "stampsy/engine/engine.hpp"

#include <cctype>
#include <map>

#include "stampsy/backends/chat.hpp"
#include "stampsy/common/error.hpp"
#include "stampsy/common/hash.hpp"
#include "stampsy/common/text.hpp"
#include "stampsy/engine/recording.hpp"
#include "stampsy/stsp/rules.hpp"

namespace stampsy::engine {

namespace {

using nlohmann::json;

bool is_word_char(unsigned char c) { return std::isalnum(c) != 0 || c == '_'; }

// ASCII patterns match whole words; others match as substrings.
bool mentions(const std::string& haystack, const std::string& pattern) {
  const std::string p = text::ascii_lower(pattern);
  if (p.empty()) return false;
  const bool ascii_word = is_word_char(static_cast<unsigned char>(p.front())) &&
                          is_word_char(static_cast<unsigned char>(p.back()));
  for (std::size_t pos = haystack.find(p); pos != std::string::npos;
       pos = haystack.find(p, pos + 1)) {
    if (!ascii_word) return true;
    const bool left = pos == 0 || !is_word_char(static_cast<unsigned char>(haystack[pos - 1]));
    const std::size_t end = pos + p.size();
    const bool right =
        end >= haystack.size() || !is_word_char(static_cast<unsigned char>(haystack[end]));
    if (left && right) return true;
  }
  return false;
}

json stages_json(const StageTimes& s) {
  return {{"received", format_iso8601(s.received)},   {"classified", format_iso8601(s.classified)},
          {"instructed", format_iso8601(s.instructed)}, {"extracted", format_iso8601(s.extracted)},
          {"stamped", format_iso8601(s.stamped)},     {"retrieved", format_iso8601(s.retrieved)},
          {"assembled", format_iso8601(s.assembled)}, {"generated", format_iso8601(s.generated)},
          {"recorded", format_iso8601(s.recorded)}};
}

std::optional<corpus::GoalLabel> goal_from_json(const json& j) {
  if (!j.is_object()) return std::nullopt;
  if (auto it = j.find("skill"); it != j.end() && it->is_string()) {
    std::optional<corpus::GuidanceSubtype> sub;
    if (auto st = j.find("subtype"); st != j.end() && st->is_string()) {
      sub = corpus::parse_subtype(st->get<std::string>());
    }
    return corpus::GoalLabel::of_skill(corpus::skill_from_string(it->get<std::string>()), sub);
  }
  if (auto it = j.find("behavior"); it != j.end() && it->is_string()) {
    if (auto b = corpus::parse_behavior(it->get<std::string>())) {
      return corpus::GoalLabel::of_behavior(*b);
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(ProcessSignal s) {
  switch (s) {
    case ProcessSignal::continue_session: return "continue";
    case ProcessSignal::warn_ending: return "warn_ending";
    case ProcessSignal::end: return "end";
  }
  return "continue";
}

json to_json(const TurnResult& r) {
  return {
      {"exchange", r.exchange},
      {"response", {{"turn_index", r.response.turn_index}, {"text", r.response.text}}},
      {"goal", corpus::to_json(r.goal)},
      {"prediction", skills::to_json(r.prediction)},
      {"instruction", r.instruction.text},
      {"state", stsp::to_json(r.state)},
      {"stamp", stsp::to_json(r.stamp)},
      {"retrieval", kstore::to_json(r.retrieval)},
      {"prompt", to_json(r.prompt)},
      {"recording", r.recording ? corpus::to_json(*r.recording) : json(nullptr)},
      {"recording_error", r.recording_error ? json(*r.recording_error) : json(nullptr)},
      {"process_signal", to_string(r.signal)},
      {"end_reason", r.end_reason ? json(*r.end_reason) : json(nullptr)},
      {"stages", stages_json(r.stages)},
  };
}

Engine::Engine(StampsyConfig config, Backends backends, Clock clock)
    : config_(std::move(config)),
      backends_(std::move(backends)),
      clock_(std::move(clock)),
      id_state_(config_.session.seed ^ 0x5eed5eed5eed5eedULL) {
  config_.validate();
  if (!backends_.chat) throw Error(ErrorCode::config, "engine needs a chat backend");
  if (!backends_.fallback) {
    backends_.fallback =
        std::make_shared<skills::KeywordClassifier>(skills::KeywordClassifier::builtin());
  }
  if (!backends_.classifier) backends_.classifier = backends_.fallback;
  if (!backends_.recorder) backends_.recorder = backends_.chat;
  if (!backends_.stamp) backends_.stamp = std::make_shared<stsp::TemplateStampGenerator>();
  if (!backends_.scorer) backends_.scorer = std::make_shared<kstore::BigramScorer>();
  if (!backends_.knowledge) backends_.knowledge = std::make_shared<kstore::KnowledgeStore>();
  if (!backends_.instructions) {
    backends_.instructions = std::shared_ptr<const skills::InstructionTemplates>(
        &skills::InstructionTemplates::builtin(), [](const skills::InstructionTemplates*) {});
  }
  if (!backends_.rules) {
    backends_.rules = std::shared_ptr<const stsp::RuleTable>(&stsp::RuleTable::builtin(),
                                                             [](const stsp::RuleTable*) {});
  }
}

std::string Engine::next_session_id() { return "s" + hex64(splitmix64(id_state_)).substr(0, 12); }

Conversation Engine::open_session(std::optional<std::string> session_id,
                                  std::optional<corpus::CaseConceptualization> ccm) {
  const std::string id = session_id ? *session_id : next_session_id();
  const Timestamp created = clock_();
  Conversation c{corpus::DialogueSession(id, config_.session.max_turns, created), EventLog{}, 0};
  json opened = {{"session_id", id},
                 {"max_turns", config_.session.max_turns},
                 {"warn_margin", config_.session.warn_margin},
                 {"time_budget_s", config_.session.time_budget_s},
                 {"created_at", format_iso8601(created)},
                 {"ccm", nullptr}};
  if (ccm) {
    opened["ccm"] = corpus::to_json(*ccm);
    c.session.set_conceptualization(std::move(*ccm));
  }
  c.log.append(EventType::opened, std::move(opened), created);
  const auto& u = c.session.append(corpus::Speaker::counselor, config_.templates.opening);
  c.log.append(EventType::counselor_turn,
               {{"turn_index", u.turn_index}, {"text", u.text}, {"kind", "opening"}}, clock_());
  return c;
}

skills::SkillPrediction Engine::classify(const std::vector<std::string>& context) {
  try {
    return skills::classify_skill(context, config_.session.use_context, *backends_.classifier);
  } catch (const Error&) {
    if (backends_.classifier == backends_.fallback) throw;
    auto p = skills::classify_skill(context, config_.session.use_context, *backends_.fallback);
    p.degraded = true;
    return p;
  }
}

std::string Engine::build_preamble(const Conversation& c, bool final_turn) const {
  std::string out = config_.templates.preamble;
  const auto& recs = c.session.recordings();
  if (config_.session.reflect_in_context && !recs.empty()) {
    out += "\nYour reflection on your previous turn:\n";
    out += render_recording(recs.back());
  }
  if (final_turn) {
    out += "\nThis is the last turn of the session. Close it along these lines: ";
    out += config_.templates.closing;
  }
  return out;
}

TurnResult Engine::step(Conversation& conversation, std::string_view client_text,
                        std::optional<corpus::GoalLabel> gold) {
  if (conversation.session.status() == corpus::SessionStatus::closed) {
    throw Error(ErrorCode::lifecycle, "session " + conversation.session.id() + " is closed");
  }
  const std::string text = text::trim(client_text);
  if (text.empty()) throw Error(ErrorCode::invalid_argument, "client text is blank");

  Conversation next = conversation;
  auto& s = next.session;
  const auto& ss = config_.session;
  TurnResult r;
  r.exchange = next.exchanges + 1;
  r.stages.received = clock_();

  const auto& client = s.append(corpus::Speaker::client, text);
  next.log.append(EventType::client_turn, {{"turn_index", client.turn_index}, {"text", text}},
                  r.stages.received);
  const std::vector<std::string> context = s.texts();

  r.prediction = classify(context);
  r.stages.classified = clock_();

  if (ss.gold_injection && gold && gold->fits(corpus::Speaker::counselor)) {
    r.goal = *gold;
  } else {
    r.goal = corpus::GoalLabel::of_skill(r.prediction.predicted);
  }
  r.instruction = backends_.instructions->lookup(*r.goal.skill(), r.goal.subtype());
  r.stages.instructed = clock_();

  r.state = stsp::extract_state(context, s.st_state(), *backends_.rules);
  s.set_st_state(r.state);
  r.stages.extracted = clock_();

  r.stamp = backends_.stamp->generate(r.state, context);
  r.stages.stamped = clock_();

  kstore::KnowledgeStore overlay;
  overlay.ingest(kstore::session_overlay(s.conceptualization(), std::nullopt));
  kstore::RetrievalOptions options;
  options.k = config_.retrieval.k;
  options.scorer = backends_.scorer.get();
  options.overlay = &overlay;
  options.always_inject_persona = config_.retrieval.always_inject_persona;
  r.retrieval = kstore::retrieve(*backends_.knowledge, {text, r.state}, *r.goal.skill(), options);
  r.stages.retrieved = clock_();

  // Process control is decided up front so the prompt can carry it.
  const double elapsed_s =
      std::chrono::duration<double>(r.stages.received - s.created_at()).count();
  if (static_cast<int>(r.exchange) >= ss.max_turns) {
    r.end_reason = "max_turns";
  } else if (ss.time_budget_s > 0 && elapsed_s >= ss.time_budget_s) {
    r.end_reason = "time_budget";
  } else if (ss.farewell_rule) {
    const std::string lowered = text::ascii_lower(text);
    for (const auto& p : ss.farewell_patterns) {
      if (mentions(lowered, p)) {
        r.end_reason = "farewell";
        break;
      }
    }
  }
  bool warn = false;
  if (!r.end_reason && s.status() == corpus::SessionStatus::open) {
    warn = static_cast<int>(r.exchange) >= ss.max_turns - ss.warn_margin ||
           (ss.time_budget_s > 0 && elapsed_s >= ss.time_budget_s - ss.warn_before_s);
  }

  std::vector<kstore::KnowledgeQuadruple> knowledge = r.retrieval.pinned;
  for (const auto& sq : r.retrieval.quadruples) knowledge.push_back(sq.quad);
  std::string preamble = build_preamble(next, r.end_reason.has_value());
  if (warn && !config_.templates.warning.empty()) preamble += "\n" + config_.templates.warning;
  r.prompt = assemble_prompt(s.utterances(), r.instruction, r.stamp, knowledge, preamble,
                             backends_.chat->max_input_tokens());
  r.stages.assembled = clock_();

  const std::string reply = text::trim(backends::chat_complete(*backends_.chat, r.prompt.text));
  if (reply.empty()) throw Error(ErrorCode::contract_violation, "chat backend returned no text");
  r.response = s.append(corpus::Speaker::counselor, reply, r.goal);
  r.stages.generated = clock_();

  if (ss.case_recordings) {
    try {
      const std::string prompt =
          recording_prompt(s.utterances(), config_.templates.case_recording,
                           backends_.recorder->max_input_tokens());
      const std::string answer = backends::chat_complete(*backends_.recorder, prompt);
      r.recording = parse_recording(answer, r.response.turn_index);
      s.add_recording(*r.recording);
    } catch (const Error& e) {
      r.recording.reset();
      r.recording_error = std::string(to_string(e.code())) + ": " + e.what();
    }
  }
  r.stages.recorded = clock_();

  next.log.append(EventType::counselor_turn,
                  {{"turn_index", r.response.turn_index},
                   {"text", r.response.text},
                   {"kind", "response"},
                   {"goal", corpus::to_json(r.goal)},
                   {"prediction", skills::to_json(r.prediction)},
                   {"instruction", r.instruction.text},
                   {"st", stsp::to_json(r.state)},
                   {"stamp", stsp::to_json(r.stamp)},
                   {"retrieval", kstore::to_json(r.retrieval)},
                   {"prompt", to_json(r.prompt)},
                   {"stages", stages_json(r.stages)}},
                  r.stages.generated);
  if (r.recording) {
    next.log.append(EventType::recording, corpus::to_json(*r.recording), r.stages.recorded);
  } else if (r.recording_error) {
    next.log.append(EventType::recording,
                    {{"turn_index", r.response.turn_index}, {"error", *r.recording_error}},
                    r.stages.recorded);
  }

  next.exchanges = r.exchange;
  if (r.end_reason) {
    r.signal = ProcessSignal::end;
    s.transition_to(corpus::SessionStatus::closed);
    next.log.append(EventType::closed, {{"reason", *r.end_reason}, {"exchange", r.exchange}},
                    clock_());
  } else if (warn) {
    r.signal = ProcessSignal::warn_ending;
    s.transition_to(corpus::SessionStatus::warned);
    next.log.append(EventType::warned, {{"exchange", r.exchange}}, clock_());
  }

  conversation = std::move(next);
  return r;
}

corpus::Utterance Engine::close_session(Conversation& conversation) {
  if (conversation.session.status() == corpus::SessionStatus::closed) {
    throw Error(ErrorCode::lifecycle, "session " + conversation.session.id() + " is already closed");
  }
  Conversation next = conversation;
  const corpus::Utterance u =
      next.session.append(corpus::Speaker::counselor, config_.templates.closing);
  next.log.append(EventType::counselor_turn,
                  {{"turn_index", u.turn_index}, {"text", u.text}, {"kind", "closing"}}, clock_());
  next.session.transition_to(corpus::SessionStatus::closed);
  next.log.append(EventType::closed, {{"reason", "operator"}, {"exchange", next.exchanges}},
                  clock_());
  conversation = std::move(next);
  return u;
}

Conversation rebuild_conversation(const EventLog& log) {
  const auto& events = log.events();
  if (events.empty() || events.front().type != EventType::opened) {
    throw Error(ErrorCode::schema_violation, "event log does not start with opened");
  }
  try {
    const json& o = events.front().payload;
    Conversation c{corpus::DialogueSession(o.at("session_id").get<std::string>(),
                                           o.at("max_turns").get<int>(),
                                           parse_iso8601(o.at("created_at").get<std::string>())),
                   EventLog{}, 0};
    if (auto it = o.find("ccm"); it != o.end() && it->is_object()) {
      corpus::CaseConceptualization ccm;
      for (const auto& [key, value] : it->items()) {
        if (auto slot = corpus::ccm_slot_from_string(key); slot && value.is_string()) {
          ccm[*slot] = value.get<std::string>();
        }
      }
      c.session.set_conceptualization(std::move(ccm));
    }
    for (const auto& e : events) {
      const json& p = e.payload;
      switch (e.type) {
        case EventType::opened: break;
        case EventType::client_turn:
          c.session.append(corpus::Speaker::client, p.at("text").get<std::string>());
          break;
        case EventType::counselor_turn: {
          std::optional<corpus::GoalLabel> goal;
          if (auto g = p.find("goal"); g != p.end()) goal = goal_from_json(*g);
          c.session.append(corpus::Speaker::counselor, p.at("text").get<std::string>(), goal);
          if (auto st = p.find("st"); st != p.end() && st->is_object()) {
            c.session.set_st_state(stsp::state_from_json(*st));
          }
          if (p.value("kind", "") == "response") ++c.exchanges;
          break;
        }
        case EventType::recording:
          if (!p.contains("error")) c.session.add_recording(corpus::recording_from_json(p));
          break;
        case EventType::warned: c.session.transition_to(corpus::SessionStatus::warned); break;
        case EventType::closed: c.session.transition_to(corpus::SessionStatus::closed); break;
      }
    }
    c.log = log;
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::schema_violation, std::string("event log: ") + e.what());
  }
}

std::vector<json> export_finetune(const EventLog& log) {
  std::vector<json> out;
  std::string session_id;
  std::map<std::size_t, json> reflections;
  for (const auto& e : log.events()) {
    if (e.type == EventType::opened) session_id = e.payload.value("session_id", "");
    if (e.type == EventType::recording && !e.payload.contains("error")) {
      json r = e.payload;
      const auto turn = r.at("turn_index").get<std::size_t>();
      r.erase("turn_index");
      reflections[turn] = std::move(r);
    }
  }
  for (const auto& e : log.events()) {
    if (e.type != EventType::counselor_turn || e.payload.value("kind", "") != "response") continue;
    const auto& p = e.payload;
    const auto turn = p.at("turn_index").get<std::size_t>();
    auto it = reflections.find(turn);
    out.push_back({{"session_id", session_id},
                   {"turn_index", turn},
                   {"skill", p.at("goal").value("skill", "")},
                   {"instruction", p.at("instruction")},
                   {"input", p.at("prompt").at("text")},
                   {"output", p.at("text")},
                   {"reflection", it == reflections.end() ? json(nullptr) : it->second}});
  }
  return out;
}

}  // namespace stampsy::engine
