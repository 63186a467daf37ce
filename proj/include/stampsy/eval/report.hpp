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

#include <optional>
#include <string>

#include <json.hpp>

#include "stampsy/eval/ghsc.hpp"
#include "stampsy/eval/metrics.hpp"
#include "stampsy/eval/quads.hpp"
#include "stampsy/eval/rubric.hpp"

namespace stampsy::eval {

// One system's results. Every block is optional; absent blocks print as "-".
struct EvalReport {
  std::string system = "stampsy";
  std::optional<GhscScore> ghsc;
  std::optional<double> stsp_accuracy;
  std::optional<GenerationScores> generation;
  std::optional<SlotValueScores> quads;
  std::optional<RubricSummary> rubric;
};

nlohmann::json to_json(const EvalReport& r);

// One row under the header
//   System | GHSC | STSP | BLEU-1 | BLEU-2 | ROUGE-L | EmbSim | Rel. | Info. | Human. | Help. | Emp.
// Automatic metrics are percentages with two decimals; rubric means are raw.
std::string render_table(const EvalReport& r);

}  // namespace stampsy::eval
