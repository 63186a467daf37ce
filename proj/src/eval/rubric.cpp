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


#include "stampsy/eval/rubric.hpp"

#include <istream>
#include <map>
#include <set>
#include <utility>

#include "stampsy/common/error.hpp"
#include "stampsy/common/text.hpp"
#include "stampsy/eval/kappa.hpp"

namespace stampsy::eval {

namespace {

constexpr std::array<std::string_view, kRubricDimensions> kNames = {
    "relevance", "informativeness", "human_likeness", "helpfulness", "empathy"};

}  // namespace

std::string_view to_string(RubricDimension d) { return kNames[static_cast<std::size_t>(d)]; }

void RubricScore::validate() const {
  if (item_id.empty() || rater_id.empty()) {
    throw Error(ErrorCode::invalid_argument, "rubric score needs an item and a rater");
  }
  for (std::size_t i = 0; i < kRubricDimensions; ++i) {
    if (values[i] < 0 || values[i] > kRubricMax) {
      throw Error(ErrorCode::invalid_argument,
                  std::string(kNames[i]) + " must be 0, 1 or 2, got " + std::to_string(values[i]));
    }
  }
}

RubricSummary aggregate_rubric(std::span<const RubricScore> scores) {
  if (scores.empty()) throw Error(ErrorCode::invalid_argument, "no rubric scores");
  RubricSummary s;
  s.scores = scores.size();
  std::map<std::string, std::map<std::string, const RubricScore*>> by_rater;
  std::set<std::string> items;
  std::array<double, kRubricDimensions> sums{};
  for (const auto& sc : scores) {
    sc.validate();
    if (!by_rater[sc.rater_id].emplace(sc.item_id, &sc).second) {
      throw Error(ErrorCode::duplicate,
                  "rater " + sc.rater_id + " scored item " + sc.item_id + " twice");
    }
    items.insert(sc.item_id);
    for (std::size_t i = 0; i < kRubricDimensions; ++i) sums[i] += sc.values[i];
  }
  s.items = items.size();
  s.raters = by_rater.size();
  for (std::size_t i = 0; i < kRubricDimensions; ++i) {
    s.means[i] = sums[i] / static_cast<double>(scores.size());
  }
  for (auto a = by_rater.begin(); a != by_rater.end(); ++a) {
    for (auto b = std::next(a); b != by_rater.end(); ++b) {
      std::vector<std::pair<const RubricScore*, const RubricScore*>> shared;
      for (const auto& [item, sa] : a->second) {
        if (auto it = b->second.find(item); it != b->second.end()) shared.emplace_back(sa, it->second);
      }
      if (shared.empty()) continue;
      for (RubricDimension d : kAllRubricDimensions) {
        std::vector<int> ra, rb;
        for (const auto& [sa, sb] : shared) {
          ra.push_back((*sa)[d]);
          rb.push_back((*sb)[d]);
        }
        s.agreement.push_back({a->first, b->first, d, shared.size(), cohen_kappa(ra, rb)});
      }
    }
  }
  return s;
}

nlohmann::json to_json(const RubricScore& s) {
  nlohmann::json j = {{"item_id", s.item_id}, {"rater_id", s.rater_id}};
  for (std::size_t i = 0; i < kRubricDimensions; ++i) j[std::string(kNames[i])] = s.values[i];
  return j;
}

RubricScore rubric_from_json(const nlohmann::json& j) {
  RubricScore s;
  try {
    s.item_id = j.at("item_id").get<std::string>();
    s.rater_id = j.at("rater_id").get<std::string>();
    for (std::size_t i = 0; i < kRubricDimensions; ++i) {
      s.values[i] = j.at(std::string(kNames[i])).get<int>();
    }
    s.validate();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::schema_violation, e.what());
  } catch (const Error& e) {
    throw Error(ErrorCode::schema_violation, e.what());
  }
  return s;
}

nlohmann::json to_json(const RubricSummary& s) {
  nlohmann::json means = nlohmann::json::object();
  for (std::size_t i = 0; i < kRubricDimensions; ++i) means[std::string(kNames[i])] = s.means[i];
  nlohmann::json agreement = nlohmann::json::array();
  for (const auto& k : s.agreement) {
    agreement.push_back({{"rater_a", k.rater_a},
                         {"rater_b", k.rater_b},
                         {"dimension", to_string(k.dimension)},
                         {"items", k.items},
                         {"kappa", k.kappa}});
  }
  return {{"scores", s.scores},
          {"items", s.items},
          {"raters", s.raters},
          {"means", means},
          {"agreement", agreement}};
}

std::vector<RubricScore> read_rubric(std::istream& in) {
  std::vector<RubricScore> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    try {
      out.push_back(rubric_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::schema_violation, "line " + std::to_string(line_no) + ": " + e.what());
    } catch (const Error& e) {
      throw Error(ErrorCode::schema_violation, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace stampsy::eval
