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
#include "stampsy/cli/cli.hpp"

using namespace stampsy;
using nlohmann::json;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string mock_config() { return testing::data_path("data/config/mock.toml").string(); }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("stampsy-cli-" + name);
}

std::string chat_script() {
  std::string s;
  for (const auto& t : testing::scripted_turns()) s += t + "\n";
  return s;
}

}  // namespace

TEST_CASE("chat transcript matches the golden file") {
  const auto r = run({"--config", mock_config(), "chat", "--session-id", "cli-0001"}, chat_script());
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == testing::read_file(testing::data_path("tests/golden/chat_repl.txt")));
}

TEST_CASE("chat is deterministic, quits on command and writes its log") {
  const auto log = temp_file("chat.jsonl");
  const auto a = run({"--config", mock_config(), "--quiet", "chat", "--log", log.string()},
                     "hello\n/quit\nnot read\n");
  const auto b = run({"--config", mock_config(), "--quiet", "chat"}, "hello\n/quit\n");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("[session]") == std::string::npos);
  CHECK(a.out.find("not read") == std::string::npos);
  const std::string events = testing::read_file(log);
  CHECK(events.find("\"closed\"") != std::string::npos);

  const auto ft = run({"export", log.string()});
  CHECK(ft.code == 0);
  CHECK(json::parse(ft.out.substr(0, ft.out.find('\n')))["turn_index"] == 2);
  std::filesystem::remove(log);
}

TEST_CASE("seed changes the mock replies") {
  const auto a = run({"--config", mock_config(), "--quiet", "--seed", "1", "chat"}, "hello\n");
  const auto b = run({"--config", mock_config(), "--quiet", "--seed", "2", "chat"}, "hello\n");
  CHECK(a.out != b.out);
}

TEST_CASE("corpus statistics") {
  const auto r = run({"--json", "stats", testing::data_path("data/corpus/sample.jsonl").string()});
  REQUIRE(r.code == 0);
  const json want = json::parse(testing::read_file(testing::data_path("data/corpus/sample_stats.json")));
  const json got = json::parse(r.out);
  CHECK(got["dialogues"] == want["dialogues"]);
  CHECK(got["mean_goals"] == want["mean_goals"]);
  const auto table = run({"stats", testing::data_path("data/corpus/sample.jsonl").string()});
  CHECK(table.out.find("# of dialogues") != std::string::npos);
}

TEST_CASE("strict statistics fail on rejected records") {
  const auto bad = temp_file("bad.jsonl");
  {
    std::ofstream f(bad);
    f << "{\"session_id\": \"x\", \"turns\": [{\"speaker\": \"robot\", \"text\": \"hi\"}]}\n";
  }
  CHECK(run({"stats", bad.string()}).code == 0);
  const auto strict = run({"stats", bad.string(), "--strict"});
  CHECK(strict.code == cli::kExitFailure);
  CHECK(strict.err.find("turns[0].speaker") != std::string::npos);
  std::filesystem::remove(bad);
}

TEST_CASE("GHSC evaluation") {
  const auto r = run({"eval", "ghsc", "--predictions", testing::data_path("tests/data/ghsc_gold.json").string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("accuracy 1.000") != std::string::npos);
  const auto kw = run({"--json", "eval", "ghsc"});
  CHECK(json::parse(kw.out)["accuracy"].get<double>() == doctest::Approx(0.6));
}

TEST_CASE("stsp extraction") {
  const auto r = run({"--json", "stsp", "extract", "Right after getting up I already feel exhausted."});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["state"]["time_of_day"] == "morning");
  const auto piped = run({"stsp", "extract", "--each"}, "It is raining.\nI am at home.\n");
  CHECK(piped.code == 0);
  CHECK(piped.out.find("rainy") != std::string::npos);
}

TEST_CASE("knowledge ingest and query") {
  const auto store = temp_file("store.jsonl");
  std::filesystem::remove(store);
  const auto quads = testing::data_path("data/knowledge/sample_quads.jsonl").string();
  CHECK(run({"kb", "ingest", quads, "--store", store.string()}).code == 0);
  CHECK(run({"kb", "ingest", quads, "--store", store.string()}).code == 0);
  std::size_t lines = 0;
  {
    std::ifstream f(store);
    std::string l;
    while (std::getline(f, l)) lines += !l.empty();
  }
  CHECK(lines == 22);
  const auto q = run({"kb", "query", "--store", store.string(), "--text", "Relaxing Method Recommendation",
                      "--skill", "direct_guidance", "--state", "time_of_day=morning"});
  CHECK(q.code == 0);
  CHECK(q.out.find("drink coffee") != std::string::npos);
  CHECK(q.out.find("read a book") == std::string::npos);
  CHECK(run({"kb", "query", "--text", "x", "--state", "mood=happy"}).code == cli::kExitUsage);
  std::filesystem::remove(store);
}

TEST_CASE("generation evaluation") {
  const auto pairs = temp_file("pairs.jsonl");
  {
    std::ofstream f(pairs);
    f << R"({"candidate": "abcde", "references": ["ace"]})" << "\n";
  }
  const auto r = run({"--json", "eval", "gen", "--pairs", pairs.string()});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["rouge_l"].get<double>() == doctest::Approx(0.75));
  std::filesystem::remove(pairs);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kExitUsage);
  const auto unknown = run({"frobnicate"});
  CHECK(unknown.code == cli::kExitUsage);
  CHECK_FALSE(unknown.err.empty());
  CHECK(run({"stats"}).code == cli::kExitUsage);
  CHECK(run({"stats", "/nonexistent/corpus.jsonl"}).code == cli::kExitFailure);
  CHECK(run({"--config", "/nonexistent/config.toml", "chat"}).code == cli::kExitFailure);
  CHECK(run({"--help"}).code == cli::kExitOk);
}
