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


#include "stampsy/engine/prompt.hpp"

#include "stampsy/common/error.hpp"
#include "stampsy/common/text.hpp"

namespace stampsy::engine {

namespace {

// Sections are joined with newlines, so the token count of the whole is the
// sum over its lines.
std::size_t tokens_of(std::string_view s) { return text::count_tokens(s); }

std::string render(const AssembledPrompt& p) {
  std::string out;
  auto line = [&out](std::string_view s) {
    out.append(s);
    out.push_back('\n');
  };
  line(kSystemHeader);
  line(p.system_preamble);
  line("");
  line(kContextHeader);
  for (const auto& c : p.context) line(c);
  if (!p.knowledge.empty()) {
    line("");
    line(kKnowledgeHeader);
    for (const auto& k : p.knowledge) line(k);
  }
  if (!p.stamp.empty()) {
    line("");
    line(kStampHeader);
    line(p.stamp.text);
  }
  line("");
  line(kGoalHeader);
  line(p.goal_instruction.text);
  return out;
}

}  // namespace

std::string render_line(const corpus::Utterance& u) {
  return std::string(u.speaker == corpus::Speaker::client ? "Client: " : "Counselor: ") + u.text;
}

nlohmann::json to_json(const AssembledPrompt& p) {
  return {{"text", p.text},
          {"tokens", p.tokens},
          {"truncated", p.truncated},
          {"dropped_context", p.dropped_context},
          {"dropped_knowledge", p.dropped_knowledge}};
}

AssembledPrompt assemble_prompt(std::span<const corpus::Utterance> context,
                                const skills::GoalInstruction& instruction,
                                const stsp::Stamp& stamp,
                                std::span<const kstore::KnowledgeQuadruple> knowledge,
                                std::string_view preamble, std::size_t budget) {
  if (context.empty()) throw Error(ErrorCode::invalid_argument, "prompt context is empty");
  AssembledPrompt p;
  p.system_preamble = std::string(preamble);
  p.goal_instruction = instruction;
  p.stamp = stamp;
  for (const auto& u : context) p.context.push_back(render_line(u));
  for (const auto& q : knowledge) p.knowledge.push_back(kstore::render(q));

  std::size_t mandatory = tokens_of(kSystemHeader) + tokens_of(preamble) +
                          tokens_of(kContextHeader) + tokens_of(p.context.back()) +
                          tokens_of(kGoalHeader) + tokens_of(instruction.text);
  if (!stamp.empty()) mandatory += tokens_of(kStampHeader) + tokens_of(stamp.text);
  if (mandatory > budget) {
    throw Error(ErrorCode::budget_too_small,
                "mandatory prompt sections need " + std::to_string(mandatory) +
                    " tokens, budget is " + std::to_string(budget));
  }

  std::size_t total = mandatory;
  for (std::size_t i = 0; i + 1 < p.context.size(); ++i) total += tokens_of(p.context[i]);
  std::size_t knowledge_tokens = 0;
  for (const auto& k : p.knowledge) knowledge_tokens += tokens_of(k);
  if (!p.knowledge.empty()) knowledge_tokens += tokens_of(kKnowledgeHeader);
  total += knowledge_tokens;

  std::size_t drop = 0;
  while (total > budget && drop + 1 < p.context.size()) {
    total -= tokens_of(p.context[drop]);
    ++drop;
  }
  p.context.erase(p.context.begin(), p.context.begin() + static_cast<std::ptrdiff_t>(drop));
  p.dropped_context = drop;
  while (total > budget && !p.knowledge.empty()) {
    total -= tokens_of(p.knowledge.back());
    p.knowledge.pop_back();
    ++p.dropped_knowledge;
    if (p.knowledge.empty()) total -= tokens_of(kKnowledgeHeader);
  }
  p.truncated = p.dropped_context > 0 || p.dropped_knowledge > 0;
  p.text = render(p);
  p.tokens = tokens_of(p.text);
  return p;
}

}  // namespace stampsy::engine
