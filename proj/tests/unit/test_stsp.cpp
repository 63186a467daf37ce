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

#include <cmath>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "scripted_session.hpp"
#include "stampsy/common/error.hpp"
#include "stampsy/stsp/loss.hpp"
#include "stampsy/stsp/rules.hpp"
#include "stampsy/stsp/stamp.hpp"
#include "stampsy/stsp/state.hpp"

using namespace stampsy;
using namespace stampsy::stsp;
using nlohmann::json;

namespace {

SpatioTemporalState extract_one(const std::string& text) {
  const std::vector<std::string> ctx{text};
  return extract_state(ctx);
}

}  // namespace

TEST_CASE("getting up maps to morning") {
  const auto s = extract_one("Right after getting up I already feel exhausted.");
  CHECK(s.time_of_day == TimeOfDay::morning);
  CHECK_FALSE(s.weather.has_value());
  REQUIRE(s.evidence.size() == 1);
  CHECK(s.evidence[0].field == Field::time_of_day);
}

TEST_CASE("sentences without cues give an empty state") {
  CHECK(extract_one("My friend stopped talking to me.").empty());
  CHECK_THROWS_AS(extract_state(std::vector<std::string>{}), Error);
}

TEST_CASE("every shipped rule fires on its example") {
  const auto& table = RuleTable::builtin();
  REQUIRE(table.rules().size() > 20);
  for (std::size_t i = 0; i < table.rules().size(); ++i) {
    const Rule& r = table.rules()[i];
    const std::string example = r.example.empty() ? r.pattern : r.example;
    bool hit = false;
    for (const auto& m : table.matches(example)) hit = hit || m.rule == i;
    CAPTURE(example);
    CHECK(hit);
  }
}

TEST_CASE("literal rules respect word boundaries") {
  const auto table = RuleTable::from_json(json::array(
      {{{"pattern", "home"}, {"field", "location"}, {"value", "home"}}}));
  CHECK(table.matches("I am at HOME now").size() == 1);
  CHECK(table.matches("homework is hard").empty());
}

TEST_CASE("malformed rule tables are rejected") {
  CHECK_THROWS_AS(RuleTable::from_json(json::array({{{"pattern", "x"}, {"field", "mood"}, {"value", "home"}}})),
                  Error);
  CHECK_THROWS_AS(RuleTable::from_json(json::array({{{"pattern", "x"}, {"field", "location"}, {"value", "moon"}}})),
                  Error);
}

TEST_CASE("later utterances override earlier ones and prior fills gaps") {
  const std::vector<std::string> ctx{"I was at home this morning.", "Now I am at school."};
  SpatioTemporalState prior;
  prior.season = Season::winter;
  const auto s = extract_state(ctx, prior);
  CHECK(s.location == Location::school);
  CHECK(s.time_of_day == TimeOfDay::morning);
  CHECK(s.season == Season::winter);
}

TEST_CASE("fixture accuracy meets the threshold") {
  std::ifstream in(testing::data_path("tests/data/stsp_fixture.jsonl"));
  REQUIRE(in);
  std::vector<SpatioTemporalState> gold, pred;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line);
    gold.push_back(state_from_json(j["gold"]));
    pred.push_back(extract_one(j["text"].get<std::string>()));
  }
  REQUIRE(gold.size() == 100);
  CHECK(stsp_accuracy(gold, pred) >= 0.95);
  CHECK(stsp_field_accuracy(gold, pred) >= 0.95);
}

TEST_CASE("accuracy ignores null gold fields") {
  SpatioTemporalState g, p;
  g.weather = Weather::rainy;
  p.weather = Weather::rainy;
  p.location = Location::home;
  const std::vector<SpatioTemporalState> gold{g, g}, pred{p, SpatioTemporalState{}};
  CHECK(stsp_accuracy(gold, pred) == doctest::Approx(0.5));
  CHECK_THROWS_AS(stsp_accuracy(gold, std::vector<SpatioTemporalState>{p}), Error);
}

TEST_CASE("state JSON round trip and aliases") {
  SpatioTemporalState s;
  s.time_of_day = TimeOfDay::late_night;
  s.location = Location::school;
  s.evidence.push_back({Field::location, "dorm"});
  CHECK(state_from_json(to_json(s)) == s);
  CHECK(parse_field_value(Field::time_of_day, "late night") == 3);
  CHECK(parse_field_value(Field::location, "dormitory") == 1);
  CHECK_FALSE(parse_field_value(Field::weather, "foggy").has_value());
  std::vector<std::string> unknown;
  state_from_json(json{{"weather", "foggy"}}, &unknown);
  CHECK(unknown == std::vector<std::string>{"weather"});
}

TEST_CASE("stamp concatenates impact sentences in field order") {
  SpatioTemporalState s;
  CHECK(make_stamp(s).empty());
  s.location = Location::home;
  s.time_of_day = TimeOfDay::morning;
  const Stamp st = make_stamp(s);
  REQUIRE(st.sources.size() == 2);
  CHECK(st.sources[0].field == Field::time_of_day);
  CHECK(st.text == std::string(impact_sentence({Field::time_of_day, 0})) + " " +
                       std::string(impact_sentence({Field::location, 0})));
}

TEST_CASE("nll loss reference values") {
  const std::vector<std::vector<double>> certain{{1.0, 0.0}};
  const std::vector<std::size_t> t0{0};
  CHECK(stamp_nll_loss(certain, t0).value == doctest::Approx(0.0));
  const std::vector<std::vector<double>> half{{0.5, 0.5}, {0.25, 0.75}};
  const std::vector<std::size_t> t{0, 0};
  CHECK(stamp_nll_loss(half, t).value == doctest::Approx((std::log(2.0) + std::log(4.0)) / 2));
  const std::vector<std::size_t> t1{1};
  const auto zero = stamp_nll_loss(certain, t1);
  CHECK(std::isinf(zero.value));
  CHECK(zero.zero_probability_at == 0u);
  const std::vector<std::vector<double>> bad{{0.7, 0.7}};
  CHECK_THROWS_AS(stamp_nll_loss(bad, t0), Error);
  CHECK_THROWS_AS(stamp_nll_loss(certain, t), Error);
}
