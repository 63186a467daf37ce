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
#include <memory>
#include <optional>
#include <regex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "stampsy/stsp/state.hpp"

namespace stampsy::stsp {

// Rule priorities used by the shipped table: an explicit clock time (3)
// beats an explicit time word (2), which beats an inference from an
// activity such as getting up (1).
struct Rule {
  std::string pattern;
  StampKey key;
  int priority = 1;
  bool is_regex = false;
  // Sentence the rule must fire on; defaults to the literal pattern.
  std::string example;
};

struct RuleMatch {
  std::size_t rule = 0;  // index into the table
  std::size_t position = 0;
  std::string span;
};

class RuleTable {
 public:
  // {"rules": [{"pattern", "field", "value", "priority", "kind": "literal"|"regex", "example"}]}
  // A bare array of rules is accepted too.
  static RuleTable from_json(const nlohmann::json& j);
  static RuleTable load(const std::string& path);
  // The table shipped in data/stsp_rules.json.
  static const RuleTable& builtin();

  std::span<const Rule> rules() const { return rules_; }
  // All matches in `text`, in rule order. Literal patterns match ASCII
  // case-insensitively and respect word boundaries for ASCII words.
  std::vector<RuleMatch> matches(std::string_view text) const;

 private:
  std::vector<Rule> rules_;
  std::vector<std::shared_ptr<const std::regex>> compiled_;
};

// Runs the rules over every utterance. Per field, the most recent utterance
// that mentions the field decides; inside that utterance the highest
// priority wins, then the later position. Fields the context never mentions
// keep their value (and evidence) from `prior`.
SpatioTemporalState extract_state(std::span<const std::string> context,
                                  const std::optional<SpatioTemporalState>& prior = std::nullopt,
                                  const RuleTable& rules = RuleTable::builtin());

// State-level: correct when every non-null gold field is matched exactly.
// Throws length_mismatch or invalid_argument (empty input).
double stsp_accuracy(std::span<const SpatioTemporalState> gold,
                     std::span<const SpatioTemporalState> predicted);
// Fraction of non-null gold fields matched; 1 when gold has no fields at all.
double stsp_field_accuracy(std::span<const SpatioTemporalState> gold,
                           std::span<const SpatioTemporalState> predicted);

}  // namespace stampsy::stsp
