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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "scripted_session.hpp"
#include "stampsy/backends/mock.hpp"
#include "stampsy/common/error.hpp"
#include "stampsy/common/text.hpp"
#include "stampsy/engine/config.hpp"
#include "stampsy/engine/engine.hpp"
#include "stampsy/engine/events.hpp"
#include "stampsy/engine/prompt.hpp"
#include "stampsy/engine/recording.hpp"

using namespace stampsy;
using namespace stampsy::engine;
using corpus::HelpingSkill;
using corpus::Speaker;
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

std::vector<corpus::Utterance> dialogue(std::size_t n) {
  std::vector<corpus::Utterance> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Speaker sp = i % 2 == 0 ? Speaker::counselor : Speaker::client;
    out.push_back({sp, "turn " + std::to_string(i) + " has a few words in it", i, std::nullopt});
  }
  return out;
}

const char* kReply =
    "1. Explicit Content: the client cannot sleep\n"
    "2. Implicit Content: Answer: worry about exams\n"
    "   and about grades\n"
    "3. Defense and Barriers to Change: avoidance\n"
    "4. Distortion: catastrophizing\n"
    "5. Countertransference: none noticed\n"
    "6. Personal Assessment: engaged\n";

std::shared_ptr<Engine> engine_with(StampsyConfig config, std::shared_ptr<backends::ChatBackend> chat,
                                    std::shared_ptr<backends::ChatBackend> recorder = nullptr) {
  auto b = build_backends(config);
  b.chat = std::move(chat);
  b.recorder = std::move(recorder);
  return std::make_shared<Engine>(config, b, testing::scripted_clock());
}

}  // namespace

TEST_CASE("prompt sections appear in order and empty ones are left out") {
  const auto ctx = dialogue(3);
  const auto instr = skills::skill_to_instruction(HelpingSkill::restatements);
  const auto p = assemble_prompt(ctx, instr, {}, {}, "You are a counselor.", 4096);
  CHECK(p.text.find(kSystemHeader) < p.text.find(kContextHeader));
  CHECK(p.text.find(kContextHeader) < p.text.find(kGoalHeader));
  CHECK(p.text.find(kKnowledgeHeader) == std::string::npos);
  CHECK(p.text.find(kStampHeader) == std::string::npos);
  CHECK(p.context.size() == 3);
  CHECK_FALSE(p.truncated);
  CHECK(p.tokens == text::count_tokens(p.text));

  stsp::SpatioTemporalState st;
  st.time_of_day = stsp::TimeOfDay::morning;
  const std::vector<kstore::KnowledgeQuadruple> k{
      {kstore::Domain::psychological_knowledge, "Relaxing", "drink coffee", std::nullopt}};
  const auto q = assemble_prompt(ctx, instr, stsp::make_stamp(st), k, "sys", 4096);
  CHECK(q.text.find(kContextHeader) < q.text.find(kKnowledgeHeader));
  CHECK(q.text.find(kKnowledgeHeader) < q.text.find(kStampHeader));
  CHECK(q.text.find(kStampHeader) < q.text.find(kGoalHeader));
}

TEST_CASE("long dialogues lose their oldest lines to fit the budget") {
  const auto ctx = dialogue(100);
  const auto instr = skills::skill_to_instruction(HelpingSkill::open_questions);
  std::vector<kstore::KnowledgeQuadruple> k;
  for (int i = 0; i < 5; ++i) {
    k.push_back({kstore::Domain::psychological_knowledge, "slot", "value " + std::to_string(i), std::nullopt});
  }
  const auto p = assemble_prompt(ctx, instr, {}, k, "sys", 300);
  CHECK(p.truncated);
  CHECK(p.tokens <= 300);
  CHECK(p.dropped_context > 0);
  CHECK(p.context.size() + p.dropped_context == 100);
  CHECK(p.context.back() == render_line(ctx.back()));
  CHECK(p.dropped_knowledge == 0);

  const auto tight = assemble_prompt(ctx, instr, {}, k, "sys", 40);
  CHECK(tight.context.size() == 1);
  CHECK(tight.dropped_knowledge > 0);
  CHECK(tight.tokens <= 40);
  CHECK(code_of([&] { assemble_prompt(ctx, instr, {}, k, "sys", 5); }) == ErrorCode::budget_too_small);
}

TEST_CASE("case recording parsing") {
  const auto rec = parse_recording(kReply, 4);
  CHECK(rec.turn_index == 4);
  CHECK(rec.complete());
  CHECK(rec[corpus::RecordingSection::implicit_content] == "worry about exams and about grades");
  CHECK(rec[corpus::RecordingSection::explicit_content] == "the client cannot sleep");
  std::string missing = kReply;
  missing = missing.substr(0, missing.find("6."));
  CHECK(code_of([&] { parse_recording(missing, 0); }) == ErrorCode::contract_violation);
  CHECK(render_recording(rec).find("- Distortion: catastrophizing") != std::string::npos);
}

TEST_CASE("recording prompt keeps the last line") {
  const auto ctx = dialogue(50);
  const std::string p = recording_prompt(ctx, "1. Explicit Content: what?", 40);
  CHECK(text::count_tokens(p) <= 40);
  CHECK(p.find(render_line(ctx.back())) != std::string::npos);
  CHECK(p.find(render_line(ctx.front())) == std::string::npos);
  CHECK(code_of([&] { recording_prompt(ctx, "1. Explicit Content: what?", 3); }) == ErrorCode::budget_too_small);
}

TEST_CASE("event log ordering rules") {
  EventLog log;
  const Timestamp t{};
  CHECK(code_of([&] { log.append(EventType::client_turn, json::object(), t); }) == ErrorCode::lifecycle);
  CHECK(log.append(EventType::opened, json::object(), t).sequence == 1);
  CHECK(code_of([&] { log.append(EventType::opened, json::object(), t); }) == ErrorCode::lifecycle);
  log.append(EventType::client_turn, json::object(), t);
  log.append(EventType::closed, json::object(), t);
  CHECK(log.closed());
  CHECK(code_of([&] { log.append(EventType::client_turn, json::object(), t); }) == ErrorCode::lifecycle);

  std::istringstream in(log.to_jsonl());
  const EventLog back = EventLog::read(in);
  CHECK(back.to_jsonl() == log.to_jsonl());

  EventLog r;
  SessionEvent e;
  e.sequence = 2;
  CHECK_THROWS_AS(r.restore(e), Error);
  CHECK(code_of([] { event_from_json(json{{"seq", 1}, {"type", "bogus"}}); }) == ErrorCode::schema_violation);
}

TEST_CASE("file and memory event stores round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "stampsy-test-events";
  std::filesystem::remove_all(dir);
  auto engine = testing::scripted_engine();
  auto conv = engine->open_session(std::string("store-1"));
  engine->step(conv, "hello there");
  FileEventStore files(dir);
  MemoryEventStore memory;
  for (const auto& e : conv.log.events()) {
    files.append("store-1", e);
    memory.append("store-1", e);
  }
  CHECK(files.load("store-1")->to_jsonl() == conv.log.to_jsonl());
  CHECK(memory.load("store-1")->to_jsonl() == conv.log.to_jsonl());
  CHECK_FALSE(files.load("missing").has_value());
  CHECK(files.sessions() == std::vector<std::string>{"store-1"});
  std::filesystem::remove_all(dir);
}

TEST_CASE("scripted session matches the golden log") {
  auto engine = testing::scripted_engine();
  const auto run = testing::run_scripted_session(*engine);
  const std::string golden = testing::read_file(testing::data_path("tests/golden/engine_10turn.jsonl"));
  CHECK(run.conversation.log.to_jsonl() == golden);

  auto again = testing::run_scripted_session(*testing::scripted_engine());
  CHECK(again.conversation.log.to_jsonl() == run.conversation.log.to_jsonl());

  std::size_t warned = 0, recordings = 0;
  for (const auto& e : run.conversation.log.events()) {
    warned += e.type == EventType::warned;
    recordings += e.type == EventType::recording && !e.payload.contains("error");
  }
  CHECK(warned == 1);
  CHECK(recordings == 10);
  CHECK(run.turns[7].signal == ProcessSignal::warn_ending);
  CHECK(run.turns.back().signal == ProcessSignal::end);
  CHECK(run.turns.back().end_reason == "max_turns");
  CHECK(run.conversation.session.status() == corpus::SessionStatus::closed);

  auto conv = run.conversation;
  CHECK(code_of([&] { engine->step(conv, "one more"); }) == ErrorCode::lifecycle);
  CHECK(code_of([&] { engine->close_session(conv); }) == ErrorCode::lifecycle);
}

TEST_CASE("rebuilding from the log restores the conversation") {
  auto engine = testing::scripted_engine();
  auto conv = engine->open_session(std::string("rebuild-1"), testing::scripted_ccm());
  engine->step(conv, testing::scripted_turns()[0]);
  engine->step(conv, testing::scripted_turns()[1]);
  const Conversation back = rebuild_conversation(conv.log);
  CHECK(back.exchanges == 2);
  CHECK(back.session.texts() == conv.session.texts());
  CHECK(back.session.recordings().size() == conv.session.recordings().size());
  CHECK(back.session.status() == conv.session.status());
  CHECK(corpus::to_json(back.session) == corpus::to_json(conv.session));
  CHECK(back.log.to_jsonl() == conv.log.to_jsonl());

  const auto records = export_finetune(conv.log);
  REQUIRE(records.size() == 2);
  CHECK(records[0]["session_id"] == "rebuild-1");
  CHECK(records[0].contains("reflection"));
}

TEST_CASE("a failed chat call leaves the conversation unchanged") {
  auto config = testing::scripted_config();
  auto faulty = std::make_shared<backends::FaultyChatBackend>(std::make_shared<backends::MockChatBackend>(7));
  auto engine = engine_with(config, faulty);
  auto conv = engine->open_session(std::string("atomic-1"));
  const std::string before = conv.log.to_jsonl();
  faulty->fail_next({ErrorCode::backend_unavailable});
  CHECK(code_of([&] { engine->step(conv, "I feel low today"); }) == ErrorCode::backend_unavailable);
  CHECK(conv.log.to_jsonl() == before);
  CHECK(conv.exchanges == 0);
  CHECK(conv.session.utterances().size() == 1);
  const auto r = engine->step(conv, "I feel low today");
  CHECK(r.exchange == 1);
  CHECK(conv.session.utterances().size() == 3);
}

TEST_CASE("a failed recording is logged and the turn still succeeds") {
  auto config = testing::scripted_config();
  auto broken = std::make_shared<backends::FaultyChatBackend>(std::make_shared<backends::MockChatBackend>(7));
  broken->fail_always(true);
  auto engine = engine_with(config, std::make_shared<backends::MockChatBackend>(7), broken);
  auto conv = engine->open_session(std::string("rec-fail"));
  const auto r = engine->step(conv, "hello");
  CHECK_FALSE(r.recording.has_value());
  REQUIRE(r.recording_error.has_value());
  CHECK(conv.log.events().back().type == EventType::recording);
  CHECK(conv.log.events().back().payload.contains("error"));
}

TEST_CASE("blank client text is rejected") {
  auto engine = testing::scripted_engine();
  auto conv = engine->open_session(std::string("blank"));
  CHECK(code_of([&] { engine->step(conv, "   "); }) == ErrorCode::invalid_argument);
}

TEST_CASE("farewell ends the session") {
  auto config = testing::scripted_config();
  config.session.farewell_rule = true;
  auto engine = std::make_shared<Engine>(config, build_backends(config), testing::scripted_clock());
  auto conv = engine->open_session(std::string("bye-1"));
  CHECK(engine->step(conv, "Thanks, goodbye!").end_reason == "farewell");
  auto conv2 = engine->open_session(std::string("bye-2"));
  CHECK(engine->step(conv2, "我要走了，再见").end_reason == "farewell");
  auto conv3 = engine->open_session(std::string("bye-3"));
  CHECK_FALSE(engine->step(conv3, "Maybe the bystanders noticed").end_reason.has_value());
}

TEST_CASE("gold injection overrides the predicted skill") {
  auto config = testing::scripted_config();
  config.session.gold_injection = true;
  auto engine = std::make_shared<Engine>(config, build_backends(config), testing::scripted_clock());
  auto conv = engine->open_session(std::string("gold-1"));
  const auto gold = corpus::GoalLabel::of_skill(HelpingSkill::direct_guidance, corpus::GuidanceSubtype::music);
  const auto r = engine->step(conv, "I feel fine", gold);
  CHECK(r.goal.skill() == HelpingSkill::direct_guidance);
  CHECK(r.instruction.subtype == corpus::GuidanceSubtype::music);
  CHECK(r.retrieval.gated);
}

TEST_CASE("knowledge is retrieved only for grounded skills") {
  auto engine = testing::scripted_engine();
  const auto run = testing::run_scripted_session(*engine);
  for (const auto& t : run.turns) {
    CHECK(t.retrieval.gated == skills::needs_knowledge(*t.goal.skill()));
    CHECK(t.retrieval.quadruples.size() <= 3);
  }
}

TEST_CASE("config parsing") {
  const auto base = std::filesystem::temp_directory_path() / "stampsy-config-test";
  std::filesystem::create_directories(base);
  {
    std::ofstream f(base / "opening.txt");
    f << "Hello, \"friend\".\n";
  }
  std::istringstream in(R"(
[session]
max_turns = 12
farewell_patterns = ["see you", "say \"ciao\""]

[templates]
opening = "opening.txt"

[retrieval]
k = 2
quads = "knowledge/q.jsonl"

[chat]
kind = "mock"
seed = 9
)");
  const auto c = parse_config(in, base);
  CHECK(c.session.max_turns == 12);
  CHECK(c.session.farewell_patterns == std::vector<std::string>{"see you", "say \"ciao\""});
  CHECK(c.templates.opening == "Hello, \"friend\".");
  CHECK(c.retrieval.k == 2);
  CHECK(c.retrieval.quads_path == (base / "knowledge/q.jsonl").string());
  std::filesystem::remove_all(base);
  CHECK(c.chat.seed == 9);

  auto parse = [](const std::string& s) {
    std::istringstream i(s);
    return parse_config(i);
  };
  CHECK(code_of([&] { parse("[session]\nbogus = 1\n"); }) == ErrorCode::config);
  CHECK(code_of([&] { parse("[session]\nmax_turns = \"ten\"\n"); }) == ErrorCode::config);
  CHECK(code_of([&] { parse("[session]\nmax_turns = 5\nwarn_margin = 5\n"); }) == ErrorCode::config);
  CHECK(code_of([&] { parse("[chat]\nkind = \"carrier-pigeon\"\n"); }) == ErrorCode::config);
  CHECK(code_of([&] { parse("[retrieval]\nscorer = \"embedding\"\n"); }) == ErrorCode::config);
  CHECK_NOTHROW(load_config(testing::data_path("data/config/mock.toml")));
}

TEST_CASE("bundled mock config builds working backends") {
  const auto c = load_config(testing::data_path("data/config/mock.toml"));
  const auto b = build_backends(c);
  CHECK(b.knowledge->size() == 22);
  REQUIRE(b.graph);
  CHECK(b.graph->edge_count() == 10);
  Engine e(c, b, testing::scripted_clock());
  auto conv = e.open_session();
  CHECK_FALSE(conv.session.id().empty());
  CHECK(conv.session.utterances().front().text == c.templates.opening);
  const auto closing = e.close_session(conv);
  CHECK(closing.text == c.templates.closing);
  CHECK(conv.log.closed());
}
