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

#include "stampsy/corpus/session.hpp"

namespace stampsy::engine {

// The dialogue so far, one rendered line per utterance, followed by the
// six-question reflection template. Oldest lines are dropped to stay within
// `budget` tokens; the last line is always kept.
std::string recording_prompt(std::span<const corpus::Utterance> dialogue,
                             std::string_view question_template, std::size_t budget);

// Reads answers keyed "N. Title: answer" (N = 1..6), continuing over
// following lines until the next numbered answer. Text up to an "Answer:"
// marker (an echoed question) is skipped. Throws contract_violation when a
// section is missing or empty.
corpus::CaseRecording parse_recording(std::string_view reply, std::size_t turn_index);

// Sections under their headings, for the next turn's system preamble.
std::string render_recording(const corpus::CaseRecording& recording);

}  // namespace stampsy::engine
