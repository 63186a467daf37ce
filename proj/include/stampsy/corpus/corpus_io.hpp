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
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "stampsy/corpus/session.hpp"

// JSON-Lines corpus format, one session per line:
//
//   {"session_id": str,
//    "st": {"time_of_day": str|null, "location": ..., "weather": ..., "season": ...},
//    "ccm": {nine slot keys}|null,
//    "turns": [{"speaker": "client"|"counselor", "text": str,
//               "goal": {"skill": str, "subtype": str|null} | {"behavior": str} | null}]}
namespace stampsy::corpus {

struct LoadIssue {
  std::size_t line = 0;  // 1-based
  std::string field;     // dotted path, e.g. "turns[3].speaker"
  std::string message;
};

struct LoadResult {
  std::vector<DialogueSession> sessions;
  // Records that were rejected.
  std::vector<LoadIssue> errors;
  // Records that were kept with a repair (unknown skill, non-alternating turns, ...).
  std::vector<LoadIssue> warnings;

  bool ok() const { return errors.empty(); }
};

// Throws not_found when the file cannot be opened. Malformed lines never
// throw; they land in LoadResult::errors.
LoadResult load_corpus(const std::filesystem::path& path);
LoadResult read_corpus(std::istream& in);

// Parses one record. Throws schema_violation whose message starts with the
// offending field path. Repairs are appended to `warnings` (line left 0).
DialogueSession session_from_json(const nlohmann::json& record,
                                  std::vector<LoadIssue>* warnings = nullptr);
// The corpus record only (no status, recordings or timestamps).
nlohmann::json to_record(const DialogueSession& session);

void write_corpus(std::ostream& out, std::span<const DialogueSession> sessions);
void save_corpus(const std::filesystem::path& path, std::span<const DialogueSession> sessions);

}  // namespace stampsy::corpus
