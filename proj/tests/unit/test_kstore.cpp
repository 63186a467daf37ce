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

#include <sstream>
#include <thread>
#include <vector>

#include "scripted_session.hpp"
#include "stampsy/backends/mock.hpp"
#include "stampsy/common/error.hpp"
#include "stampsy/kstore/graph.hpp"
#include "stampsy/kstore/quadruple.hpp"
#include "stampsy/kstore/scorer.hpp"
#include "stampsy/kstore/store.hpp"

using namespace stampsy;
using namespace stampsy::kstore;
using corpus::HelpingSkill;
using nlohmann::json;

namespace {

KnowledgeQuadruple relax(const std::string& value, std::optional<stsp::StampKey> stamp) {
  return {Domain::psychological_knowledge, "Relaxing Method Recommendation", value, stamp};
}

constexpr stsp::StampKey kMorning{stsp::Field::time_of_day, 0};
constexpr stsp::StampKey kLateNight{stsp::Field::time_of_day, 3};

}  // namespace

TEST_CASE("stamp filter keeps coffee in the morning and the book late at night") {
  KnowledgeStore store;
  const std::vector<KnowledgeQuadruple> quads{relax("drink coffee", kMorning), relax("read a book", kLateNight)};
  CHECK(store.ingest(quads) == 2);
  CHECK(store.size() == 2);

  RetrievalQuery q{"Relaxing Method Recommendation", {}};
  q.state.time_of_day = stsp::TimeOfDay::morning;
  auto r = retrieve(store, q, HelpingSkill::direct_guidance);
  CHECK(r.gated);
  REQUIRE(r.quadruples.size() == 1);
  CHECK(r.quadruples[0].quad.value == "drink coffee");

  q.state.time_of_day = stsp::TimeOfDay::late_night;
  r = retrieve(store, q, HelpingSkill::direct_guidance);
  REQUIRE(r.quadruples.size() == 1);
  CHECK(r.quadruples[0].quad.value == "read a book");

  q.state.time_of_day.reset();
  CHECK(retrieve(store, q, HelpingSkill::direct_guidance).quadruples.size() == 2);
}

TEST_CASE("retrieval is gated on the skill") {
  KnowledgeStore store;
  store.ingest(std::vector<KnowledgeQuadruple>{relax("drink coffee", std::nullopt)});
  const RetrievalQuery q{"relaxing method", {}};
  const auto r = retrieve(store, q, HelpingSkill::restatements);
  CHECK_FALSE(r.gated);
  CHECK(r.quadruples.empty());
  CHECK(retrieve(store, q, HelpingSkill::information_giving).gated);
  RetrievalOptions zero;
  zero.k = 0;
  CHECK_THROWS_AS(retrieve(store, q, HelpingSkill::direct_guidance, zero), Error);
}

TEST_CASE("ranking drops zero scores and keeps top k") {
  KnowledgeStore store;
  store.ingest(std::vector<KnowledgeQuadruple>{
      relax("listen to calm music", std::nullopt),
      {Domain::psychological_knowledge, "Therapy", "cognitive behavioral therapy", std::nullopt},
      {Domain::psychological_knowledge, "zzz", "qqq", std::nullopt}});
  RetrievalOptions opt;
  opt.k = 1;
  const auto r = retrieve(store, {"calm music to relax", {}}, HelpingSkill::direct_guidance, opt);
  REQUIRE(r.quadruples.size() == 1);
  CHECK(r.quadruples[0].quad.value == "listen to calm music");
  opt.k = kUnlimited;
  const auto all = retrieve(store, {"calm music to relax", {}}, HelpingSkill::direct_guidance, opt);
  for (const auto& s : all.quadruples) CHECK(s.score > 0.0);
  for (std::size_t i = 1; i < all.quadruples.size(); ++i) {
    CHECK(all.quadruples[i - 1].score >= all.quadruples[i].score);
  }
}

TEST_CASE("overlay is searched with the store") {
  KnowledgeStore store, overlay;
  corpus::CaseConceptualization ccm;
  ccm[corpus::CcmSlot::stressors] = "final exams next week";
  stsp::SpatioTemporalState st;
  st.location = stsp::Location::school;
  const auto quads = session_overlay(ccm, st);
  REQUIRE(quads.size() == 2);
  CHECK(quads[0].domain == Domain::personal_information);
  CHECK(quads[1].stamp == stsp::StampKey{stsp::Field::location, 1});
  overlay.ingest(quads);
  RetrievalOptions opt;
  opt.overlay = &overlay;
  const auto r = retrieve(store, {"stressors exams", st}, HelpingSkill::interpretations, opt);
  REQUIRE_FALSE(r.quadruples.empty());
  CHECK(r.quadruples[0].quad.value == "final exams next week");
  CHECK(session_overlay(std::nullopt, std::nullopt).empty());
}

TEST_CASE("ingest is all or nothing and deduplicates") {
  KnowledgeStore store;
  const auto q = relax("walk outside", std::nullopt);
  CHECK(store.ingest(std::vector<KnowledgeQuadruple>{q, q}) == 1);
  CHECK_THROWS_AS(store.ingest(std::vector<KnowledgeQuadruple>{relax("x", std::nullopt), relax("", std::nullopt)}),
                  Error);
  CHECK(store.size() == 1);
  CHECK(store.by_slot(Domain::psychological_knowledge, "Relaxing Method Recommendation").size() == 1);
  CHECK(store.unstamped().size() == 1);
  CHECK(store.by_stamp(kMorning).empty());
}

TEST_CASE("stamp compatibility") {
  stsp::SpatioTemporalState s;
  CHECK(stamp_compatible(std::nullopt, s));
  CHECK(stamp_compatible(kMorning, s));
  s.time_of_day = stsp::TimeOfDay::late_night;
  CHECK_FALSE(stamp_compatible(kMorning, s));
  CHECK(stamp_compatible(kLateNight, s));
  CHECK(stamp_compatible(stsp::StampKey{stsp::Field::weather, 0}, s));
}

TEST_CASE("quadruple JSON and rendering") {
  const auto q = relax("drink coffee", kMorning);
  CHECK(render(q) == "[psychological_knowledge|Relaxing Method Recommendation|drink coffee|morning]");
  CHECK(quad_from_json(to_json(q)) == q);
  CHECK(quad_from_json(json{{"domain", "Personal Information"}, {"slot", "a"}, {"value", "b"}}).domain ==
        Domain::personal_information);
  CHECK_THROWS_AS(quad_from_json(json{{"domain", "x"}, {"slot", "a"}, {"value", "b"}}), Error);
  CHECK_THROWS_AS(quad_from_json(json{{"domain", "psychological_knowledge"}, {"slot", "a"}, {"value", "b"},
                                      {"stamp", "tuesday"}}),
                  Error);
  std::istringstream in(to_json(q).dump() + "\n\n{\"domain\": 1}\n");
  try {
    read_quads(in);
    FAIL("expected a schema violation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::schema_violation);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("bundled quadruples load") {
  const auto quads = load_quads(testing::data_path("data/knowledge/sample_quads.jsonl"));
  CHECK(quads.size() == 22);
  CHECK_THROWS_AS(load_quads("/nonexistent/quads.jsonl"), Error);
}

TEST_CASE("bigram dice") {
  CHECK(bigram_dice("night", "nacht") == doctest::Approx(0.25));
  CHECK(bigram_dice("Read a book", "read-a-book!") == doctest::Approx(1.0));
  CHECK(bigram_dice("abc", "xyz") == 0.0);
  CHECK(bigram_dice("a", "a") == doctest::Approx(1.0));
  CHECK(bigram_dice("", "abc") == 0.0);
  BigramScorer s;
  const std::vector<std::string> docs{"night", "nacht"};
  const auto v = s.score("night", docs);
  CHECK(v[0] == doctest::Approx(1.0));
  CHECK(v[1] == doctest::Approx(0.25));
}

TEST_CASE("embedding scorer clips negatives") {
  auto e = std::make_shared<backends::MockEmbedder>(1, 16);
  EmbeddingScorer s(e);
  const std::vector<std::string> docs{"sleep at night", "tax return forms", "zz"};
  for (double v : s.score("I cannot sleep at night", docs)) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0 + 1e-9);
  }
}

TEST_CASE("knowledge graph") {
  const auto g = load_graph(testing::data_path("data/knowledge/sample_kg.jsonl"));
  CHECK(g.edge_count() == 10);
  const auto therapies = g.neighbors("insomnia", Relation::disorder_therapy);
  REQUIRE_FALSE(therapies.empty());
  CHECK(therapies[0] == KGEdge{"insomnia", Relation::disorder_therapy, "relaxation_training"});
  for (const auto& e : therapies) CHECK(e.relation == Relation::disorder_therapy);
  CHECK(g.neighbors("insomnia").size() > therapies.size());
  CHECK_THROWS_AS(g.neighbors("unknown-entity"), Error);

  KnowledgeGraph h;
  CHECK(h.add_entity("a"));
  CHECK_FALSE(h.add_entity("a"));
  h.add_entity("b");
  CHECK(h.add_edge({"a", Relation::other, "b"}));
  CHECK_FALSE(h.add_edge({"a", Relation::other, "b"}));
  CHECK_THROWS_AS(h.add_edge({"a", Relation::other, "a"}), Error);
  CHECK_THROWS_AS(h.add_edge({"a", Relation::other, "c"}), Error);
  CHECK(relation_from_string("nonsense") == Relation::other);

  std::istringstream bad("{\"s\": \"x\"}\n");
  CHECK_THROWS_AS(read_graph(bad), Error);
}

TEST_CASE("concurrent reads during ingest") {
  KnowledgeStore store;
  store.ingest(std::vector<KnowledgeQuadruple>{relax("seed", std::nullopt)});
  std::thread writer([&] {
    for (int i = 0; i < 200; ++i) {
      store.ingest(std::vector<KnowledgeQuadruple>{relax("item " + std::to_string(i), std::nullopt)});
    }
  });
  for (int i = 0; i < 200; ++i) {
    const auto r = retrieve(store, {"relaxing item", {}}, HelpingSkill::direct_guidance);
    CHECK(r.quadruples.size() <= 5);
  }
  writer.join();
  CHECK(store.size() == 201);
}
