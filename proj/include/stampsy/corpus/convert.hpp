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

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "stampsy/corpus/corpus_io.hpp"

// Converter from annotation exports to the corpus record format.
//
// Accepted input, either JSON-Lines or one JSON array of records:
//
//   {"id": str, "time": str?, "weather": str?, "season": str?, "location": str?,
//    "dialog": [{"role": str, "content": str, "goal": str|null}]}
//
// Goal strings are raw annotation labels: "Open questions", "Narration",
// "Recommendation: Music", "Direct guidance: Recommended Place", "Goodbye".
namespace stampsy::corpus {

// nullopt for an empty or unrecognised label.
std::optional<GoalLabel> goal_from_label(Speaker speaker, std::string_view label);

struct ConvertResult {
  std::vector<nlohmann::json> records;
  std::vector<LoadIssue> errors;
  std::vector<LoadIssue> warnings;
};

// `line` in issues is the 1-based record number.
ConvertResult convert_export(std::istream& in);

}  // namespace stampsy::corpus
