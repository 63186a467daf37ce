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


// One PASS/FAIL line per primary acceptance criterion. Exit status is the
// number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "scripted_session.hpp"
#include "stampsy/common/error.hpp"
#include "stampsy/corpus/corpus_io.hpp"
#include "stampsy/corpus/stats.hpp"
#include "stampsy/eval/ghsc.hpp"
#include "stampsy/eval/kappa.hpp"
#include "stampsy/eval/metrics.hpp"
#include "stampsy/kstore/store.hpp"
#include "stampsy/service/server.hpp"
#include "stampsy/stsp/loss.hpp"
#include "stampsy/stsp/rules.hpp"

namespace {

using namespace stampsy;
using nlohmann::json;
using testing::data_path;

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome corpus_statistics() {
  const auto loaded = corpus::load_corpus(data_path("data/corpus/sample.jsonl"));
  if (!loaded.ok()) return {false, "sample corpus has rejected records"};
  const json got = corpus::to_json(corpus::corpus_stats(loaded.sessions));
  const json want = json::parse(testing::read_file(data_path("data/corpus/sample_stats.json")));
  std::size_t alternating = 0;
  for (const auto& s : loaded.sessions) alternating += s.alternation_warning() ? 0 : 1;
  const bool ok = got == want && loaded.sessions.size() == 3 && alternating == 3;
  return {ok, "published corpus not bundled; 3-session sample vs precomputed fixture: " +
                  std::string(got == want ? "identical" : "differs")};
}

Outcome metric_oracle() {
  const json oracle = json::parse(testing::read_file(data_path("tests/data/metric_oracle.json")));
  double worst = 0.0;
  std::vector<eval::GenerationPair> pairs;
  for (const auto& p : oracle["pairs"]) {
    eval::GenerationPair pair{p["candidate"], p["references"].get<std::vector<std::string>>()};
    worst = std::max(worst, std::abs(eval::bleu(pair.candidate, pair.references, 1) - p["bleu1"].get<double>()));
    worst = std::max(worst, std::abs(eval::bleu(pair.candidate, pair.references, 2) - p["bleu2"].get<double>()));
    worst = std::max(worst, std::abs(eval::rouge_l(pair.candidate, pair.references.front()) -
                                     p["rouge_l"].get<double>()));
    pairs.push_back(std::move(pair));
  }
  worst = std::max(worst, std::abs(eval::corpus_bleu(pairs, 1) - oracle["corpus"]["bleu1"].get<double>()));
  worst = std::max(worst, std::abs(eval::corpus_bleu(pairs, 2) - oracle["corpus"]["bleu2"].get<double>()));
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu pairs, max abs error %.3g", pairs.size(), worst);
  return {pairs.size() == 50 && worst <= 1e-9, buf};
}

Outcome ghsc_harness() {
  const auto& t = eval::GhscTranscript::builtin();
  const auto gold = t.gold();
  const double self = eval::score_ghsc(t, gold).accuracy;
  std::size_t others = 0;
  for (const auto& u : t.units()) others += u.skill == corpus::HelpingSkill::others ? 1 : 0;
  const double baseline = eval::constant_baseline(t, corpus::HelpingSkill::others);
  const double expected = static_cast<double>(others) / static_cast<double>(t.units().size());
  char buf[128];
  std::snprintf(buf, sizeof buf, "self %.3f, all-others %zu/%zu = %.4f", self, others,
                t.units().size(), baseline);
  return {self == 1.0 && baseline == expected, buf};
}

Outcome gate_soundness() {
  const auto quads = kstore::load_quads(data_path("data/knowledge/sample_quads.jsonl"));
  kstore::KnowledgeStore store;
  store.ingest(quads);
  const std::vector<corpus::HelpingSkill> hs_wk = {
      corpus::HelpingSkill::immediacy, corpus::HelpingSkill::interpretations,
      corpus::HelpingSkill::information_giving, corpus::HelpingSkill::direct_guidance};
  std::vector<stsp::SpatioTemporalState> states(1);
  for (stsp::Field f : stsp::kFields) {
    for (std::size_t v = 0; v < stsp::field_values(f).size(); ++v) {
      stsp::SpatioTemporalState s;
      s.set({f, static_cast<int>(v)});
      states.push_back(s);
    }
  }
  std::size_t cases = 0;
  std::size_t violations = 0;
  kstore::RetrievalOptions opts;
  opts.k = kstore::kUnlimited;
  for (auto skill : corpus::kAllSkills) {
    const bool should = std::find(hs_wk.begin(), hs_wk.end(), skill) != hs_wk.end();
    for (const auto& state : states) {
      ++cases;
      const auto r = kstore::retrieve(store, {"recommend a relaxing method for sleep", state}, skill, opts);
      if (r.gated != should || (!should && !r.quadruples.empty()) ||
          (should && r.quadruples.empty())) {
        ++violations;
      }
      for (const auto& q : r.quadruples) {
        if (!q.quad.stamp) continue;
        const auto v = state.get(q.quad.stamp->field);
        if (v && *v != q.quad.stamp->value) ++violations;
      }
    }
  }
  kstore::KnowledgeStore pair;
  const auto coffee = kstore::quad_from_json(
      {{"domain", "psychological_knowledge"}, {"slot", "Relaxing Method Recommendation"},
       {"value", "drink coffee"}, {"stamp", "morning"}});
  const auto book = kstore::quad_from_json(
      {{"domain", "psychological_knowledge"}, {"slot", "Relaxing Method Recommendation"},
       {"value", "read a book"}, {"stamp", "night"}});
  const std::vector<kstore::KnowledgeQuadruple> both = {coffee, book};
  pair.ingest(both);
  stsp::SpatioTemporalState morning;
  morning.set(*stsp::parse_stamp_value("morning"));
  const auto r = kstore::retrieve(pair, {"Relaxing Method Recommendation", morning},
                                  corpus::HelpingSkill::direct_guidance, {});
  const bool coffee_ok = pair.size() == 2 && r.quadruples.size() == 1 &&
                         r.quadruples.front().quad.value == "drink coffee";
  return {violations == 0 && coffee_ok,
          std::to_string(cases) + " skill/state cases, " + std::to_string(violations) +
              " violations; coffee/book " + (coffee_ok ? "ok" : "wrong")};
}

Outcome stsp_rules() {
  std::ifstream in(data_path("tests/data/stsp_fixture.jsonl"));
  std::vector<stsp::SpatioTemporalState> gold, predicted;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto row = json::parse(line);
    gold.push_back(stsp::state_from_json(row["gold"]));
    const std::vector<std::string> context = {row["text"].get<std::string>()};
    predicted.push_back(stsp::extract_state(context));
  }
  const double acc = stsp::stsp_accuracy(gold, predicted);
  std::size_t strict = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) strict += gold[i].same_values(predicted[i]) ? 1 : 0;

  using P = std::vector<std::vector<double>>;
  const std::vector<std::size_t> t1 = {0}, t2 = {0, 1};
  const P certain = {{1.0, 0.0}};
  const P halves = {{0.5, 0.5}, {0.5, 0.5}};
  const P quarter = {{0.25, 0.25, 0.25, 0.25}};
  const double e0 = std::abs(stsp::stamp_nll_loss(certain, t1).value - 0.0);
  const double e2 = std::abs(stsp::stamp_nll_loss(halves, t2).value - std::log(2.0));
  const double e4 = std::abs(stsp::stamp_nll_loss(quarter, t1).value - std::log(4.0));
  const bool nll_ok = e0 <= 1e-12 && e2 <= 1e-12 && e4 <= 1e-12;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "state accuracy %.2f on %zu sentences (all four fields exact: %zu), NLL 0/ln2/ln4 %s",
                acc, gold.size(), strict, nll_ok ? "exact" : "off");
  return {gold.size() == 100 && acc >= 0.95 && nll_ok, buf};
}

Outcome engine_determinism() {
  const auto golden = testing::read_file(data_path("tests/golden/engine_10turn.jsonl"));
  auto first_engine = testing::scripted_engine();
  auto first = testing::run_scripted_session(*first_engine);
  auto second_engine = testing::scripted_engine();
  const auto second = testing::run_scripted_session(*second_engine);
  const auto log = first.conversation.log.to_jsonl();
  std::size_t warned = 0;
  std::size_t recordings = 0;
  for (const auto& e : first.conversation.log.events()) {
    if (e.type == engine::EventType::warned) ++warned;
  }
  for (const auto& r : first.conversation.session.recordings()) recordings += r.complete() ? 1 : 0;
  bool rejected = false;
  try {
    first_engine->step(first.conversation, "one more thing");
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::lifecycle;
  }
  const bool ok = log == golden && log == second.conversation.log.to_jsonl() && warned == 1 &&
                  recordings == 10 && rejected;
  return {ok, std::string("golden ") + (log == golden ? "identical" : "differs") + ", warned " +
                  std::to_string(warned) + ", complete recordings " + std::to_string(recordings) +
                  ", turn after close " + (rejected ? "rejected" : "accepted")};
}

Outcome kappa_checks() {
  const std::vector<int> a = {1, 0, 1, 1, 0}, perfect = a;
  const std::vector<int> x = {1, 1, 0, 0}, y = {1, 0, 1, 0};
  const double k_perfect = eval::cohen_kappa(a, perfect);
  const double k_indep = eval::cohen_kappa(x, y);
  std::mt19937_64 rng(12345);
  std::bernoulli_distribution coin(0.5);
  std::vector<int> r1(10000), r2(10000);
  for (std::size_t i = 0; i < r1.size(); ++i) {
    r1[i] = coin(rng);
    r2[i] = coin(rng);
  }
  const double k_mc = eval::cohen_kappa(r1, r2);
  char buf[128];
  std::snprintf(buf, sizeof buf, "perfect %.3f, independent 2x2 %.3f, Monte Carlo n=10000 %.4f",
                k_perfect, k_indep, k_mc);
  return {k_perfect == 1.0 && k_indep == 0.0 && std::abs(k_mc) < 0.05, buf};
}

Outcome api_replay() {
  const auto golden = testing::read_file(data_path("tests/golden/engine_10turn.jsonl"));
  service::Server server(testing::scripted_engine(), std::make_shared<engine::MemoryEventStore>());
  const int port = server.start("127.0.0.1", 0);
  httplib::Client client("127.0.0.1", port);
  json open_body = {{"session_id", testing::kScriptedSessionId},
                    {"ccm", corpus::to_json(testing::scripted_ccm())}};
  auto res = client.Post("/sessions", open_body.dump(), "application/json");
  if (!res || res->status != 201) return {false, "POST /sessions failed"};
  const std::string base = std::string("/sessions/") + testing::kScriptedSessionId;
  for (const auto& text : testing::scripted_turns()) {
    res = client.Post(base + "/turns", json{{"text", text}}.dump(), "application/json");
    if (!res || res->status != 200) return {false, "turn failed"};
  }
  res = client.Post(base + "/turns", json{{"text", "one more thing"}}.dump(), "application/json");
  const int after_close = res ? res->status : 0;
  res = client.Get(base);
  if (!res || res->status != 200) return {false, "GET session failed"};
  std::string log;
  const json body = json::parse(res->body);
  for (const auto& e : body["events"]) log += e.dump() + "\n";
  server.stop();
  std::string diff = "identical";
  if (log != golden) {
    std::istringstream a(log), b(golden);
    std::string la, lb;
    int line = 0;
    while (true) {
      ++line;
      const bool ga = static_cast<bool>(std::getline(a, la));
      const bool gb = static_cast<bool>(std::getline(b, lb));
      if (!ga && !gb) break;
      if (la != lb || ga != gb) {
        diff = "differs at line " + std::to_string(line);
        break;
      }
    }
  }
  return {log == golden && after_close == 409,
          "HTTP log vs golden " + diff + ", turn after close " + std::to_string(after_close)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"corpus-statistics", corpus_statistics}, {"metric-oracle", metric_oracle},
      {"ghsc-harness", ghsc_harness},           {"hs-wk-gate", gate_soundness},
      {"stsp-rules", stsp_rules},               {"engine-determinism", engine_determinism},
      {"kappa", kappa_checks},                  {"api-replay", api_replay}};
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::printf("%s %-20s %s (%lld ms)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(),
                static_cast<long long>(ms));
    failures += o.pass ? 0 : 1;
  }
  return failures;
}
