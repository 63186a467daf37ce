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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "stampsy/corpus/taxonomy.hpp"
#include "stampsy/skills/classify.hpp"
#include "stampsy/skills/report.hpp"

// The annotated helper practice transcript used as a skill-labelling check.
namespace stampsy::eval {

using corpus::HelpingSkill;

struct GhscUnit {
  std::size_t exchange = 0;  // 1-based
  std::string text;
  std::string label;  // as written in the transcript
  HelpingSkill skill = HelpingSkill::others;
};

struct GhscExchange {
  std::size_t index = 0;
  std::vector<GhscUnit> helper_units;
  std::vector<std::string> unscored;
  std::string client;
};

class GhscTranscript {
 public:
  // The transcript shipped in data/ghsc_transcript.json.
  static const GhscTranscript& builtin();
  static GhscTranscript from_json(const nlohmann::json& j);
  static GhscTranscript load(const std::filesystem::path& path);

  const std::vector<GhscExchange>& exchanges() const { return exchanges_; }
  // Scored helper units in transcript order.
  const std::vector<GhscUnit>& units() const { return units_; }
  std::vector<HelpingSkill> gold() const;

  // Everything said before the unit, oldest first, followed by the unit.
  std::vector<std::string> context_of(std::size_t unit) const;

 private:
  std::vector<GhscExchange> exchanges_;
  std::vector<GhscUnit> units_;
  std::vector<std::vector<std::string>> contexts_;
};

struct GhscScore {
  std::size_t total = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;
  skills::ClassificationReport report;
};

// Throws length_mismatch unless there is one prediction per scored unit.
GhscScore score_ghsc(const GhscTranscript& transcript, std::span<const HelpingSkill> predictions);

// Accuracy of predicting one skill for every unit.
double constant_baseline(const GhscTranscript& transcript, HelpingSkill skill);

std::vector<HelpingSkill> predict_ghsc(const GhscTranscript& transcript,
                                       skills::ClassifierBackend& backend, bool use_context);

// A JSON array of skill names, or {"predictions": [...]}. Label aliases used
// in the transcript are accepted. Throws schema_violation.
std::vector<HelpingSkill> predictions_from_json(const nlohmann::json& j);
std::vector<HelpingSkill> read_predictions(std::istream& in);

nlohmann::json to_json(const GhscScore& s);

}  // namespace stampsy::eval
