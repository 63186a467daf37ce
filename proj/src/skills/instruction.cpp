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

#include "stampsy/skills/instruction.hpp"

#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "stampsy/common/error.hpp"
#include "stampsy/common/text.hpp"
#include "stampsy/embedded/instruction_templates_txt.hpp"

namespace stampsy::skills {

nlohmann::json to_json(const GoalInstruction& g) {
  return {{"text", g.text},
          {"skill", to_string(g.source_skill)},
          {"subtype", g.subtype ? nlohmann::json(to_string(*g.subtype)) : nlohmann::json(nullptr)}};
}

InstructionTemplates InstructionTemplates::parse(std::string_view input) {
  InstructionTemplates t;
  std::istringstream in{std::string(input)};
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorCode::config, "instruction templates line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string trimmed = text::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) fail("expected 'key = value'");
    const std::string key = text::trim(trimmed.substr(0, eq));
    const std::string value = text::trim(trimmed.substr(eq + 1));
    if (value.empty()) fail("empty instruction for '" + key + "'");
    const auto dot = key.find('.');
    auto skill = corpus::parse_skill(key.substr(0, dot));
    if (!skill || to_string(*skill) != key.substr(0, dot)) fail("unknown skill '" + key + "'");
    if (dot == std::string::npos) {
      t.by_skill_[corpus::index_of(*skill)] = value;
      continue;
    }
    if (*skill != HelpingSkill::direct_guidance) fail("subtype on '" + key + "'");
    auto sub = corpus::parse_subtype(key.substr(dot + 1));
    if (!sub || to_string(*sub) != key.substr(dot + 1)) fail("unknown subtype in '" + key + "'");
    t.by_subtype_[static_cast<std::size_t>(*sub)] = value;
  }
  std::set<std::string> seen;
  for (HelpingSkill s : corpus::kAllSkills) {
    const auto& v = t.by_skill_[corpus::index_of(s)];
    if (v.empty()) throw Error(ErrorCode::config, "no instruction for '" + std::string(to_string(s)) + "'");
    if (!seen.insert(v).second) throw Error(ErrorCode::config, "instruction reused: " + v);
  }
  for (GuidanceSubtype g : corpus::kAllSubtypes) {
    const auto& v = t.by_subtype_[static_cast<std::size_t>(g)];
    if (v.empty()) {
      throw Error(ErrorCode::config,
                  "no instruction for 'direct_guidance." + std::string(to_string(g)) + "'");
    }
    if (!seen.insert(v).second) throw Error(ErrorCode::config, "instruction reused: " + v);
  }
  return t;
}

InstructionTemplates InstructionTemplates::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::not_found, "cannot open instruction templates " + path);
  return parse(std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>()));
}

const InstructionTemplates& InstructionTemplates::builtin() {
  static const InstructionTemplates t = parse(embedded::instruction_templates_txt);
  return t;
}

GoalInstruction InstructionTemplates::lookup(HelpingSkill skill,
                                             std::optional<GuidanceSubtype> subtype) const {
  if (subtype && skill != HelpingSkill::direct_guidance) {
    throw Error(ErrorCode::invalid_argument, "guidance subtype given for skill '" +
                                                 std::string(to_string(skill)) + "'");
  }
  if (subtype) return {by_subtype_[static_cast<std::size_t>(*subtype)], skill, subtype};
  return {by_skill_[corpus::index_of(skill)], skill, std::nullopt};
}

}  // namespace stampsy::skills
