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
#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "stampsy/corpus/taxonomy.hpp"

namespace stampsy::skills {

struct ClassMetrics {
  std::size_t support = 0;    // gold count
  std::size_t predicted = 0;  // predicted count
  std::size_t true_positives = 0;
  // Null when the class never occurs in gold.
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;
};

struct ClassificationReport {
  std::array<ClassMetrics, corpus::kSkillCount> per_class{};
  std::size_t total = 0;
  double accuracy = 0.0;
  // Averages over classes present in gold, weighted by gold support.
  double weighted_precision = 0.0;
  double weighted_recall = 0.0;
  double weighted_f1 = 0.0;

  const ClassMetrics& operator[](corpus::HelpingSkill s) const {
    return per_class[corpus::index_of(s)];
  }
};

// Precision with no predictions of a class is 0. Throws length_mismatch on
// unequal lengths and invalid_argument on empty input.
ClassificationReport classification_report(std::span<const corpus::HelpingSkill> gold,
                                           std::span<const corpus::HelpingSkill> predicted);

nlohmann::json to_json(const ClassificationReport& r);
std::string render_table(const ClassificationReport& r);

}  // namespace stampsy::skills
