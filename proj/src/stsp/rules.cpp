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

#include "stampsy/stsp/rules.hpp"

#include <array>
#include <cctype>
#include <fstream>

#include "stampsy/common/error.hpp"
#include "stampsy/common/text.hpp"
#include "stampsy/embedded/stsp_rules_json.hpp"

namespace stampsy::stsp {

namespace {

bool is_word_byte(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

void find_literal(const std::string& text, const std::string& pattern,
                  std::vector<std::size_t>& out) {
  const bool word_start = is_word_byte(pattern.front());
  const bool word_end = is_word_byte(pattern.back());
  for (std::size_t pos = text.find(pattern); pos != std::string::npos;
       pos = text.find(pattern, pos + 1)) {
    const std::size_t end = pos + pattern.size();
    if (word_start && pos > 0 && is_word_byte(text[pos - 1])) continue;
    if (word_end && end < text.size() && is_word_byte(text[end])) continue;
    out.push_back(pos);
  }
}

void check_lengths(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::length_mismatch,
                "gold has " + std::to_string(a) + " states, predictions " + std::to_string(b));
  }
  if (a == 0) throw Error(ErrorCode::invalid_argument, "no states to score");
}

}  // namespace

RuleTable RuleTable::from_json(const nlohmann::json& j) {
  const nlohmann::json& list = j.is_array() ? j : j.at("rules");
  RuleTable table;
  std::size_t index = 0;
  for (const auto& r : list) {
    const std::string where = "stsp rule " + std::to_string(index++);
    try {
      Rule rule;
      rule.pattern = r.at("pattern").get<std::string>();
      if (rule.pattern.empty()) throw Error(ErrorCode::config, where + ": empty pattern");
      const std::string field_name = r.at("field").get<std::string>();
      auto field = field_from_string(field_name);
      if (!field) throw Error(ErrorCode::config, where + ": unknown field '" + field_name + "'");
      const std::string value_name = r.at("value").get<std::string>();
      auto value = parse_field_value(*field, value_name);
      if (!value) {
        throw Error(ErrorCode::config, where + ": '" + value_name + "' is not a " + field_name);
      }
      rule.key = StampKey{*field, *value};
      rule.priority = r.value("priority", 1);
      const std::string kind = r.value("kind", "literal");
      if (kind != "literal" && kind != "regex") {
        throw Error(ErrorCode::config, where + ": kind must be literal or regex");
      }
      rule.is_regex = kind == "regex";
      rule.example = r.value("example", rule.pattern);
      if (rule.is_regex && !r.contains("example")) {
        throw Error(ErrorCode::config, where + ": regex rules need an example");
      }
      if (rule.is_regex) {
        table.compiled_.push_back(std::make_shared<const std::regex>(
            rule.pattern, std::regex::ECMAScript | std::regex::icase));
      } else {
        rule.pattern = text::ascii_lower(rule.pattern);
        table.compiled_.push_back(nullptr);
      }
      table.rules_.push_back(std::move(rule));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::config, where + ": " + e.what());
    } catch (const std::regex_error& e) {
      throw Error(ErrorCode::config, where + ": bad regex: " + e.what());
    }
  }
  return table;
}

RuleTable RuleTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::not_found, "cannot open rule table " + path);
  try {
    return from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::config, path + ": " + e.what());
  }
}

const RuleTable& RuleTable::builtin() {
  static const RuleTable table = from_json(nlohmann::json::parse(embedded::stsp_rules_json));
  return table;
}

std::vector<RuleMatch> RuleTable::matches(std::string_view input) const {
  std::vector<RuleMatch> out;
  const std::string raw(input);
  const std::string lowered = text::ascii_lower(input);
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Rule& rule = rules_[i];
    if (compiled_[i]) {
      for (auto it = std::sregex_iterator(raw.begin(), raw.end(), *compiled_[i]);
           it != std::sregex_iterator(); ++it) {
        out.push_back({i, static_cast<std::size_t>(it->position()), it->str()});
      }
      continue;
    }
    positions.clear();
    find_literal(lowered, rule.pattern, positions);
    for (std::size_t pos : positions) out.push_back({i, pos, raw.substr(pos, rule.pattern.size())});
  }
  return out;
}

SpatioTemporalState extract_state(std::span<const std::string> context,
                                  const std::optional<SpatioTemporalState>& prior,
                                  const RuleTable& rules) {
  if (context.empty()) throw Error(ErrorCode::invalid_argument, "state extraction context is empty");
  struct Best {
    const RuleMatch* match = nullptr;
    int priority = 0;
  };
  std::array<bool, 4> decided{};
  SpatioTemporalState state;
  std::array<std::optional<Evidence>, 4> evidence;

  for (std::size_t u = context.size(); u-- > 0;) {
    const std::vector<RuleMatch> found = rules.matches(context[u]);
    std::array<Best, 4> best{};
    for (const RuleMatch& m : found) {
      const Rule& rule = rules.rules()[m.rule];
      const auto f = static_cast<std::size_t>(rule.key.field);
      if (decided[f]) continue;
      Best& b = best[f];
      if (!b.match || rule.priority > b.priority ||
          (rule.priority == b.priority && m.position > b.match->position)) {
        b = {&m, rule.priority};
      }
    }
    for (std::size_t f = 0; f < 4; ++f) {
      if (!best[f].match) continue;
      const Rule& rule = rules.rules()[best[f].match->rule];
      state.set(rule.key);
      evidence[f] = Evidence{rule.key.field, best[f].match->span};
      decided[f] = true;
    }
    if (decided[0] && decided[1] && decided[2] && decided[3]) break;
  }

  for (Field field : kFields) {
    const auto f = static_cast<std::size_t>(field);
    if (decided[f]) {
      state.evidence.push_back(*evidence[f]);
    } else if (prior) {
      if (auto key = prior->key(field)) {
        state.set(*key);
        for (const Evidence& e : prior->evidence) {
          if (e.field == field) state.evidence.push_back(e);
        }
      }
    }
  }
  return state;
}

double stsp_accuracy(std::span<const SpatioTemporalState> gold,
                     std::span<const SpatioTemporalState> predicted) {
  check_lengths(gold.size(), predicted.size());
  std::size_t correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    bool ok = true;
    for (Field f : kFields) {
      if (auto g = gold[i].get(f); g && predicted[i].get(f) != g) ok = false;
    }
    if (ok) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(gold.size());
}

double stsp_field_accuracy(std::span<const SpatioTemporalState> gold,
                           std::span<const SpatioTemporalState> predicted) {
  check_lengths(gold.size(), predicted.size());
  std::size_t total = 0;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    for (Field f : kFields) {
      auto g = gold[i].get(f);
      if (!g) continue;
      ++total;
      if (predicted[i].get(f) == g) ++correct;
    }
  }
  return total == 0 ? 1.0 : static_cast<double>(correct) / static_cast<double>(total);
}

}  // namespace stampsy::stsp
