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
#include <span>
#include <string>

#include <json.hpp>

#include "stampsy/corpus/taxonomy.hpp"

namespace stampsy::skills {

using corpus::HelpingSkill;
using corpus::kSkillCount;
using Distribution = std::array<double, kSkillCount>;

inline constexpr double kProbabilityTolerance = 1e-6;

// Index of the largest value; the earliest index wins ties.
std::size_t argmax(std::span<const double> values);
// Numerically stable softmax.
Distribution softmax(const Distribution& logits);

// Throws contract_violation unless every entry is in [0, 1] and the sum is
// within kProbabilityTolerance of 1.
void check_distribution(const Distribution& p);

struct SkillPrediction {
  Distribution probabilities{};
  HelpingSkill predicted = HelpingSkill::others;
  bool used_context = false;
  // Oldest context segments were dropped to fit the backend's input budget.
  bool truncated = false;
  // The primary backend failed and the keyword fallback answered.
  bool degraded = false;
  std::string backend;

  double probability(HelpingSkill s) const { return probabilities[corpus::index_of(s)]; }

  // Validates `p` and sets `predicted` to its argmax.
  static SkillPrediction from(const Distribution& p, bool used_context, std::string backend);
};

// {"immediacy": p, ...} with every skill present.
nlohmann::json distribution_to_json(const Distribution& p);
// Missing skills read as 0; unknown skill names throw contract_violation.
Distribution distribution_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SkillPrediction& p);

// True for the four skills that tend to need external knowledge: immediacy,
// interpretations, information_giving and direct_guidance. Retrieval is
// gated on it.
bool needs_knowledge(HelpingSkill skill);

}  // namespace stampsy::skills
