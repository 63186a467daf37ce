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

#include "stampsy/skills/prediction.hpp"

namespace stampsy::skills {

// A helping-skill classifier. Implementations must tolerate concurrent calls.
class ClassifierBackend {
 public:
  virtual ~ClassifierBackend() = default;

  virtual std::string name() const = 0;
  // Budget over all segments, counted with text::count_tokens (mixed mode).
  virtual std::size_t max_input_tokens() const = 0;
  // Distribution for the last segment; earlier segments are its context.
  // Each backend decides how segments are delimited on its side.
  virtual Distribution predict(std::span<const std::string> segments) = 0;
};

// Offline baseline: weighted cue phrases. A rule adds its weight once per
// distinct pattern found in the final segment; the distribution is a softmax
// of the per-skill totals. challenge is never predicted.
class KeywordClassifier final : public ClassifierBackend {
 public:
  struct Rule {
    HelpingSkill skill;
    double weight;
    std::vector<std::string> patterns;  // lowercased
  };

  // {"temperature": t, "base": {skill: score}, "rules": [{"skill", "weight", "patterns"}]}
  static KeywordClassifier from_json(const nlohmann::json& table);
  // The table shipped in data/skill_keywords.json.
  static KeywordClassifier builtin();

  std::string name() const override { return "keyword"; }
  std::size_t max_input_tokens() const override { return 1u << 20; }
  Distribution predict(std::span<const std::string> segments) override;

  // Per-skill score before the softmax.
  Distribution scores(std::string_view text) const;
  Distribution distribution(std::string_view text) const;
  const std::vector<Rule>& rules() const { return rules_; }

 private:
  double temperature_ = 1.0;
  Distribution base_{};
  std::vector<Rule> rules_;
};

// Runs the backend over the context. Without context only the last utterance
// is sent. With context the oldest utterances are dropped until the segments
// fit the backend budget (the last utterance is always kept) and the result
// is flagged as truncated. Backend failures propagate unchanged.
SkillPrediction classify_skill(std::span<const std::string> context, bool use_context,
                               ClassifierBackend& backend);

}  // namespace stampsy::skills
