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
#include <string_view>

#include <json.hpp>

#include "stampsy/common/text.hpp"
#include "stampsy/corpus/session.hpp"

namespace stampsy::corpus {

// The five conversation types a counselor turn's skill rolls up to.
enum class DialogueType { diagnosis, qa, knowledge_grounded, recommendation, empathetic };
inline constexpr std::size_t kDialogueTypeCount = 5;
std::string_view to_string(DialogueType t);
// nullopt for skills outside the rollup (challenge, others).
std::optional<DialogueType> dialogue_type_of(HelpingSkill skill);

struct GoalCount {
  std::size_t count = 0;
  std::size_t tokens = 0;
  std::optional<double> mean_length() const;
};

struct StatsReport {
  text::TokenMode token_mode = text::TokenMode::mixed;
  std::size_t dialogues = 0;
  std::size_t client_utterances = 0;
  std::size_t counselor_utterances = 0;
  std::size_t client_tokens = 0;
  std::size_t counselor_tokens = 0;
  std::size_t labeled_counselor_utterances = 0;
  std::size_t unlabeled_utterances = 0;
  std::size_t alternation_warnings = 0;

  std::size_t total_goals = 0;
  std::optional<std::size_t> max_goals;
  std::optional<std::size_t> min_goals;
  std::size_t distinct_skill_sum = 0;
  std::size_t distinct_type_sum = 0;

  std::array<GoalCount, kSkillCount> per_skill{};
  std::array<GoalCount, 5> per_subtype{};
  std::array<GoalCount, kDialogueTypeCount> per_type{};

  std::optional<double> mean_client_tokens() const;
  std::optional<double> mean_counselor_tokens() const;
  std::optional<double> mean_goals() const;
  std::optional<double> mean_distinct_skills() const;
  std::optional<double> mean_distinct_types() const;
};

// Goals per dialogue count every non-null goal label on either side.
// Distinct skills count counselor skills only. Token counts are integers and
// means are taken once at the end, so the report does not depend on session
// order.
StatsReport corpus_stats(std::span<const DialogueSession> sessions,
                         text::TokenMode mode = text::TokenMode::mixed);

nlohmann::json to_json(const StatsReport& report);
// Two blocks laid out like the dataset tables: overall statistics, then goal
// types with their counts and mean lengths.
std::string render_table(const StatsReport& report);

}  // namespace stampsy::corpus
