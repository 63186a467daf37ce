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

#include <cctype>
#include <cmath>
#include <limits>

#include "stampsy/common/error.hpp"
#include "stampsy/common/text.hpp"
#include "stampsy/embedded/skill_keywords_json.hpp"
#include "stampsy/skills/classify.hpp"

namespace stampsy::skills {

namespace {

bool is_word_byte(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '\'';
}

// ASCII-word patterns must not match inside a longer word ("how" in "show").
bool matches(const std::string& text, const std::string& pattern) {
  const bool word_start = !pattern.empty() && is_word_byte(pattern.front());
  const bool word_end = !pattern.empty() && is_word_byte(pattern.back());
  for (std::size_t pos = text.find(pattern); pos != std::string::npos;
       pos = text.find(pattern, pos + 1)) {
    const bool left_ok = !word_start || pos == 0 || !is_word_byte(text[pos - 1]);
    const std::size_t end = pos + pattern.size();
    const bool right_ok = !word_end || end == text.size() || !is_word_byte(text[end]);
    if (left_ok && right_ok) return true;
  }
  return false;
}

}  // namespace

KeywordClassifier KeywordClassifier::from_json(const nlohmann::json& table) {
  KeywordClassifier c;
  try {
    c.temperature_ = table.value("temperature", 1.0);
    if (!(c.temperature_ > 0)) throw Error(ErrorCode::config, "temperature must be positive");
    if (auto it = table.find("base"); it != table.end()) {
      for (const auto& [name, score] : it->items()) {
        auto skill = corpus::parse_skill(name);
        if (!skill) throw Error(ErrorCode::config, "unknown skill '" + name + "' in base");
        c.base_[corpus::index_of(*skill)] = score.get<double>();
      }
    }
    for (const auto& r : table.at("rules")) {
      const std::string name = r.at("skill").get<std::string>();
      auto skill = corpus::parse_skill(name);
      if (!skill) throw Error(ErrorCode::config, "unknown skill '" + name + "' in rules");
      if (*skill == HelpingSkill::challenge) {
        throw Error(ErrorCode::config, "challenge is not a generation skill");
      }
      Rule rule{*skill, r.value("weight", 1.0), {}};
      for (const auto& p : r.at("patterns")) {
        std::string pat = text::ascii_lower(p.get<std::string>());
        if (pat.empty()) throw Error(ErrorCode::config, "empty keyword pattern");
        rule.patterns.push_back(std::move(pat));
      }
      c.rules_.push_back(std::move(rule));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::config, std::string("keyword table: ") + e.what());
  }
  return c;
}

KeywordClassifier KeywordClassifier::builtin() {
  static const nlohmann::json table = nlohmann::json::parse(embedded::skill_keywords_json);
  return from_json(table);
}

Distribution KeywordClassifier::scores(std::string_view input) const {
  const std::string lowered = text::ascii_lower(input);
  Distribution s = base_;
  for (const Rule& rule : rules_) {
    for (const std::string& p : rule.patterns) {
      if (matches(lowered, p)) s[corpus::index_of(rule.skill)] += rule.weight;
    }
  }
  return s;
}

Distribution KeywordClassifier::distribution(std::string_view input) const {
  Distribution logits = scores(input);
  for (double& v : logits) v /= temperature_;
  logits[corpus::index_of(HelpingSkill::challenge)] = -std::numeric_limits<double>::infinity();
  return softmax(logits);
}

Distribution KeywordClassifier::predict(std::span<const std::string> segments) {
  if (segments.empty()) throw Error(ErrorCode::invalid_argument, "no segments to classify");
  return distribution(segments.back());
}

}  // namespace stampsy::skills
