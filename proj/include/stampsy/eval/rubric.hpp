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


#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

// Human ratings of generated responses on five 0..2 dimensions.
namespace stampsy::eval {

enum class RubricDimension { relevance, informativeness, human_likeness, helpfulness, empathy };
inline constexpr std::size_t kRubricDimensions = 5;
inline constexpr int kRubricMax = 2;
inline constexpr std::array<RubricDimension, kRubricDimensions> kAllRubricDimensions = {
    RubricDimension::relevance, RubricDimension::informativeness, RubricDimension::human_likeness,
    RubricDimension::helpfulness, RubricDimension::empathy};

std::string_view to_string(RubricDimension d);

struct RubricScore {
  std::string item_id;
  std::string rater_id;
  std::array<int, kRubricDimensions> values{};

  int operator[](RubricDimension d) const { return values[static_cast<std::size_t>(d)]; }
  // Throws invalid_argument for empty ids or values outside 0..2.
  void validate() const;
};

struct PairwiseKappa {
  std::string rater_a;
  std::string rater_b;
  RubricDimension dimension = RubricDimension::relevance;
  std::size_t items = 0;  // items both raters scored
  double kappa = 0.0;
};

struct RubricSummary {
  std::size_t scores = 0;
  std::size_t items = 0;
  std::size_t raters = 0;
  std::array<double, kRubricDimensions> means{};
  // One entry per rater pair and dimension; pairs sharing no item are left out.
  std::vector<PairwiseKappa> agreement;
};

// Throws invalid_argument when empty, duplicate when a rater scores an item
// twice.
RubricSummary aggregate_rubric(std::span<const RubricScore> scores);

nlohmann::json to_json(const RubricScore& s);
RubricScore rubric_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RubricSummary& s);
// JSONL, one score per line. Throws schema_violation with the line number.
std::vector<RubricScore> read_rubric(std::istream& in);

}  // namespace stampsy::eval
