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
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "stampsy/corpus/taxonomy.hpp"

namespace stampsy::skills {

using corpus::GuidanceSubtype;
using corpus::HelpingSkill;

struct GoalInstruction {
  std::string text;
  HelpingSkill source_skill;
  std::optional<GuidanceSubtype> subtype;

  friend bool operator==(const GoalInstruction&, const GoalInstruction&) = default;
};

nlohmann::json to_json(const GoalInstruction& g);

// Skill-to-instruction table. Lines are `skill[.subtype] = instruction`;
// blank lines and lines starting with '#' are skipped. Parsing rejects tables
// that miss a skill or a guidance subtype, or that map two keys to the same
// text, so lookups are total and injective.
class InstructionTemplates {
 public:
  static InstructionTemplates parse(std::string_view text);
  static InstructionTemplates load(const std::string& path);
  // The table shipped in data/instruction_templates.txt.
  static const InstructionTemplates& builtin();

  // Throws invalid_argument when a subtype accompanies another skill.
  GoalInstruction lookup(HelpingSkill skill,
                         std::optional<GuidanceSubtype> subtype = std::nullopt) const;

 private:
  std::array<std::string, corpus::kSkillCount> by_skill_;
  std::array<std::string, 5> by_subtype_;
};

inline GoalInstruction skill_to_instruction(HelpingSkill skill,
                                            std::optional<GuidanceSubtype> subtype = std::nullopt) {
  return InstructionTemplates::builtin().lookup(skill, subtype);
}

}  // namespace stampsy::skills
