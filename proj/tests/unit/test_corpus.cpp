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

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "scripted_session.hpp"
#include "stampsy/common/error.hpp"
#include "stampsy/corpus/convert.hpp"
#include "stampsy/corpus/corpus_io.hpp"
#include "stampsy/corpus/split.hpp"
#include "stampsy/corpus/stats.hpp"

using namespace stampsy;
using namespace stampsy::corpus;
using nlohmann::json;

namespace {

LoadResult read_lines(const std::string& text) {
  std::istringstream in(text);
  return read_corpus(in);
}

const char* kRecord =
    R"({"session_id":"a","turns":[{"speaker":"counselor","text":"Hi","goal":{"skill":"others"}},)"
    R"({"speaker":"client","text":"Hello","goal":{"behavior":"narration"}}]})";

}  // namespace

TEST_CASE("bundled sample loads with alternating speakers") {
  const auto r = load_corpus(testing::data_path("data/corpus/sample.jsonl"));
  REQUIRE(r.ok());
  REQUIRE(r.sessions.size() == 3);
  for (const auto& s : r.sessions) {
    CHECK_FALSE(s.alternation_warning());
    CHECK(s.status() == SessionStatus::closed);
  }
  CHECK(r.sessions[0].st_state()->location == stsp::Location::school);
  CHECK(r.sessions[1].conceptualization() == std::nullopt);
}

TEST_CASE("sample statistics equal the precomputed fixture") {
  const auto r = load_corpus(testing::data_path("data/corpus/sample.jsonl"));
  const json want = json::parse(testing::read_file(testing::data_path("data/corpus/sample_stats.json")));
  CHECK(to_json(corpus_stats(r.sessions)) == want);
}

TEST_CASE("statistics do not depend on session order") {
  auto sessions = load_corpus(testing::data_path("data/corpus/sample.jsonl")).sessions;
  const json base = to_json(corpus_stats(sessions));
  std::mt19937 rng(5);
  for (int i = 0; i < 6; ++i) {
    std::shuffle(sessions.begin(), sessions.end(), rng);
    CHECK(to_json(corpus_stats(sessions)) == base);
  }
}

TEST_CASE("stats on empty input report nulls") {
  const auto r = corpus_stats({});
  CHECK(r.dialogues == 0);
  CHECK_FALSE(r.mean_goals().has_value());
  CHECK(to_json(r)["max_goals"].is_null());
  CHECK(render_table(r).find("# of dialogues") != std::string::npos);
}

TEST_CASE("schema errors carry line and field path") {
  const auto r = read_lines(std::string(kRecord) + "\n" +
                            R"({"session_id":"b","turns":[{"speaker":"robot","text":"x"}]})" + "\n" +
                            "not json\n" + kRecord + "\n");
  CHECK(r.sessions.size() == 1);
  REQUIRE(r.errors.size() == 3);
  CHECK(r.errors[0].line == 2);
  CHECK(r.errors[0].field == "turns[0].speaker");
  CHECK(r.errors[1].line == 3);
  CHECK(r.errors[2].message.find("duplicate") != std::string::npos);
}

TEST_CASE("goal labels must fit the speaker") {
  const auto r = read_lines(
      R"({"session_id":"c","turns":[{"speaker":"client","text":"x","goal":{"skill":"restatements"}}]})");
  REQUIRE(r.errors.size() == 1);
  CHECK(r.errors[0].field == "turns[0].goal.skill");
  const auto sub = read_lines(
      R"({"session_id":"d","turns":[{"speaker":"counselor","text":"x","goal":{"skill":"restatements","subtype":"music"}}]})");
  REQUIRE(sub.errors.size() == 1);
  CHECK(sub.errors[0].field == "turns[0].goal.subtype");
}

TEST_CASE("unknown skills are kept as others with a warning") {
  const auto r = read_lines(
      R"({"session_id":"e","turns":[{"speaker":"counselor","text":"x","goal":{"skill":"telepathy"}}]})");
  REQUIRE(r.ok());
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.sessions[0].utterances()[0].goal->skill() == HelpingSkill::others);
}

TEST_CASE("non-alternating sessions are kept with a warning") {
  const auto r = read_lines(
      R"({"session_id":"f","turns":[{"speaker":"client","text":"x"},{"speaker":"client","text":"y"}]})");
  REQUIRE(r.ok());
  CHECK(r.sessions[0].alternation_warning());
  CHECK(r.warnings.size() == 1);
}

TEST_CASE("record round trip") {
  const auto r = load_corpus(testing::data_path("data/corpus/sample.jsonl"));
  std::ostringstream out;
  write_corpus(out, r.sessions);
  std::istringstream in(out.str());
  const auto again = read_corpus(in);
  REQUIRE(again.ok());
  for (std::size_t i = 0; i < r.sessions.size(); ++i) {
    CHECK(to_record(again.sessions[i]) == to_record(r.sessions[i]));
  }
}

TEST_CASE("session lifecycle") {
  DialogueSession s("s1", 4, Timestamp{});
  s.append(Speaker::counselor, "hello", GoalLabel::of_skill(HelpingSkill::others));
  CHECK_THROWS_AS(s.append(Speaker::client, "   "), Error);
  CHECK_THROWS_AS(s.append(Speaker::client, "x", GoalLabel::of_skill(HelpingSkill::immediacy)), Error);
  s.append(Speaker::client, "hi");
  s.transition_to(SessionStatus::warned);
  CHECK_THROWS_AS(s.transition_to(SessionStatus::open), Error);
  s.transition_to(SessionStatus::closed);
  try {
    s.append(Speaker::client, "more");
    FAIL("append on a closed session");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::lifecycle);
  }
}

TEST_CASE("recordings attach to counselor turns once") {
  DialogueSession s("s2", 4, Timestamp{});
  s.append(Speaker::counselor, "hello");
  s.append(Speaker::client, "hi");
  CaseRecording rec;
  rec.turn_index = 1;
  CHECK_THROWS_AS(s.add_recording(rec), Error);
  rec.turn_index = 0;
  s.add_recording(rec);
  CHECK_THROWS_AS(s.add_recording(rec), Error);
  CHECK_FALSE(rec.complete());
}

TEST_CASE("guidance subtypes only on direct guidance") {
  CHECK_THROWS_AS(GoalLabel::of_skill(HelpingSkill::restatements, GuidanceSubtype::music), Error);
  const auto g = GoalLabel::of_skill(HelpingSkill::direct_guidance, GuidanceSubtype::music);
  CHECK(g.subtype() == GuidanceSubtype::music);
}

TEST_CASE("skill aliases") {
  CHECK(parse_skill("Restatments") == HelpingSkill::restatements);
  CHECK(parse_skill("Reflection of feeling") == HelpingSkill::feeling_reflection);
  CHECK(parse_skill("Questions") == HelpingSkill::open_questions);
  CHECK(parse_skill("Self-disclosure") == HelpingSkill::self_disclosures);
  CHECK_FALSE(parse_skill("nonsense").has_value());
  CHECK_THROWS_AS(skill_from_string("Questions"), Error);
}

TEST_CASE("dialogue type rollup") {
  CHECK(dialogue_type_of(HelpingSkill::immediacy) == DialogueType::diagnosis);
  CHECK(dialogue_type_of(HelpingSkill::direct_guidance) == DialogueType::recommendation);
  CHECK_FALSE(dialogue_type_of(HelpingSkill::challenge).has_value());
}

TEST_CASE("split partitions every index once") {
  for (std::size_t n : {0u, 1u, 7u, 100u, 5006u}) {
    const auto s = split_indices(n, {}, 42);
    std::vector<std::size_t> all;
    all.insert(all.end(), s.train.begin(), s.train.end());
    all.insert(all.end(), s.dev.begin(), s.dev.end());
    all.insert(all.end(), s.test.begin(), s.test.end());
    std::sort(all.begin(), all.end());
    CHECK(all.size() == n);
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    if (n > 0) CHECK(all.back() == n - 1);
  }
  const auto a = split_indices(100, {}, 1), b = split_indices(100, {}, 1), c = split_indices(100, {}, 2);
  CHECK(a.test == b.test);
  CHECK(a.test != c.test);
}

TEST_CASE("convert annotation export") {
  std::istringstream in(
      R"({"id":"x1","time":"late night","location":"dormitory","dialog":[)"
      R"({"role":"counselor","content":"What brings you here?","goal":"Open questions"},)"
      R"({"role":"client","content":"I can't sleep.","goal":"Narration"},)"
      R"({"role":"counselor","content":"Try soft music.","goal":"Recommendation: Music"}]})");
  const auto r = convert_export(in);
  REQUIRE(r.errors.empty());
  REQUIRE(r.records.size() == 1);
  const auto s = session_from_json(r.records[0]);
  CHECK(s.utterances().size() == 3);
  CHECK(s.utterances()[2].goal->subtype() == GuidanceSubtype::music);
  CHECK(s.st_state()->location == stsp::Location::school);
  CHECK(s.st_state()->time_of_day == stsp::TimeOfDay::late_night);
}
