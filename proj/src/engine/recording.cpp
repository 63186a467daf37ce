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


#include "stampsy/engine/recording.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "stampsy/common/error.hpp"
#include "stampsy/common/text.hpp"
#include "stampsy/engine/prompt.hpp"

namespace stampsy::engine {

namespace {

// "3. Title: rest" -> (3, "rest"); 0 when the line does not start an answer.
int numbered(const std::string& line, std::string& rest) {
  std::size_t i = 0;
  while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
  if (i == 0 || i > 2 || i >= line.size() || line[i] != '.') return 0;
  const int n = std::stoi(line.substr(0, i));
  if (n < 1 || n > static_cast<int>(corpus::kRecordingSectionCount)) return 0;
  std::string body = text::trim(line.substr(i + 1));
  const auto colon = body.find(':');
  rest = colon == std::string::npos ? body : text::trim(body.substr(colon + 1));
  return n;
}

std::string strip_answer(std::string s) {
  s = text::trim(s);
  for (std::string_view marker : {"Answer:", "answer:", "A:"}) {
    if (const auto pos = s.find(marker); pos != std::string::npos) {
      return text::trim(s.substr(pos + marker.size()));
    }
  }
  return s;
}

}  // namespace

std::string recording_prompt(std::span<const corpus::Utterance> dialogue,
                             std::string_view question_template, std::size_t budget) {
  if (dialogue.empty()) throw Error(ErrorCode::invalid_argument, "dialogue is empty");
  std::vector<std::string> lines;
  for (const auto& u : dialogue) lines.push_back(render_line(u));
  std::size_t total = text::count_tokens(question_template);
  for (const auto& l : lines) total += text::count_tokens(l);
  std::size_t drop = 0;
  while (total > budget && drop + 1 < lines.size()) total -= text::count_tokens(lines[drop++]);
  if (total > budget) {
    throw Error(ErrorCode::budget_too_small, "case recording prompt does not fit the budget");
  }
  std::string out;
  for (std::size_t i = drop; i < lines.size(); ++i) out += lines[i] + "\n";
  out += "\n";
  out += question_template;
  return out;
}

corpus::CaseRecording parse_recording(std::string_view reply, std::size_t turn_index) {
  corpus::CaseRecording rec;
  rec.turn_index = turn_index;
  std::istringstream in{std::string(reply)};
  std::string line;
  int current = 0;
  while (std::getline(in, line)) {
    line = text::trim(line);
    if (line.empty()) continue;
    std::string rest;
    if (const int n = numbered(line, rest)) {
      current = n;
      auto& section = rec.sections[static_cast<std::size_t>(n - 1)];
      const std::string answer = strip_answer(rest);
      if (!answer.empty()) section = section.empty() ? answer : section + " " + answer;
      continue;
    }
    if (current == 0) continue;
    auto& section = rec.sections[static_cast<std::size_t>(current - 1)];
    const std::string answer = strip_answer(line);
    if (!answer.empty()) section = section.empty() ? answer : section + " " + answer;
  }
  for (std::size_t i = 0; i < corpus::kRecordingSectionCount; ++i) {
    if (text::trim(rec.sections[i]).empty()) {
      throw Error(ErrorCode::contract_violation,
                  "case recording lacks section '" +
                      std::string(corpus::heading(static_cast<corpus::RecordingSection>(i))) + "'");
    }
  }
  return rec;
}

std::string render_recording(const corpus::CaseRecording& recording) {
  std::string out;
  for (std::size_t i = 0; i < corpus::kRecordingSectionCount; ++i) {
    out += "- ";
    out += corpus::heading(static_cast<corpus::RecordingSection>(i));
    out += ": " + recording.sections[i] + "\n";
  }
  return out;
}

}  // namespace stampsy::engine
