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

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "stampsy/corpus/session.hpp"
#include "stampsy/kstore/quadruple.hpp"
#include "stampsy/skills/instruction.hpp"
#include "stampsy/stsp/stamp.hpp"

namespace stampsy::engine {

inline constexpr std::string_view kSystemHeader = "### System";
inline constexpr std::string_view kContextHeader = "### Dialogue Context";
inline constexpr std::string_view kKnowledgeHeader = "### Reference Knowledge";
inline constexpr std::string_view kStampHeader = "### Spatiotemporal Stamp";
inline constexpr std::string_view kGoalHeader = "### Goal";

// "Client: ..." / "Counselor: ..."
std::string render_line(const corpus::Utterance& u);

struct AssembledPrompt {
  std::string system_preamble;
  skills::GoalInstruction goal_instruction;
  stsp::Stamp stamp;
  std::vector<std::string> knowledge;  // rendered quadruples, rank order
  std::vector<std::string> context;    // rendered lines kept, oldest first
  std::size_t dropped_context = 0;
  std::size_t dropped_knowledge = 0;
  bool truncated = false;
  std::string text;
  std::size_t tokens = 0;
};

nlohmann::json to_json(const AssembledPrompt& p);

// Renders the sections in the order system, dialogue context, reference
// knowledge, stamp, goal; the knowledge and stamp sections are left out when
// empty. When the rendering exceeds `budget` tokens, the oldest context lines
// go first, then the lowest-ranked knowledge. The last context line, the
// preamble, the stamp and the goal are never dropped; if they alone exceed
// the budget the call throws budget_too_small.
AssembledPrompt assemble_prompt(std::span<const corpus::Utterance> context,
                                const skills::GoalInstruction& instruction,
                                const stsp::Stamp& stamp,
                                std::span<const kstore::KnowledgeQuadruple> knowledge,
                                std::string_view preamble, std::size_t budget);

}  // namespace stampsy::engine
