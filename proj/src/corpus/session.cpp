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

#include "stampsy/corpus/session.hpp"

#include <algorithm>
#include <utility>

#include "stampsy/common/error.hpp"
#include "stampsy/common/text.hpp"

namespace stampsy::corpus {

namespace {

constexpr std::array<std::string_view, kCcmSlotCount> kCcmNames = {
    "profile_background", "problem_presentation",    "comorbidity",
    "stressors",          "treatments_received",     "strengths",
    "risk_protective_summary", "outcomes",           "barriers"};

constexpr std::array<std::string_view, kRecordingSectionCount> kSectionNames = {
    "explicit_content", "implicit_content",    "defense_barriers",
    "distortions",      "countertransference", "personal_assessment"};

constexpr std::array<std::string_view, kRecordingSectionCount> kSectionHeadings = {
    "Explicit Content",
    "Implicit Content",
    "Defense and Barriers to Change",
    "Distortion",
    "Countertransference",
    "Personal Assessment"};

}  // namespace

GoalLabel GoalLabel::of_skill(HelpingSkill skill, std::optional<GuidanceSubtype> subtype) {
  if (subtype && skill != HelpingSkill::direct_guidance) {
    throw Error(ErrorCode::invalid_argument,
                "guidance subtype given for skill '" + std::string(to_string(skill)) + "'");
  }
  GoalLabel g;
  g.skill_ = skill;
  g.subtype_ = subtype;
  return g;
}

GoalLabel GoalLabel::of_behavior(ClientBehavior behavior) {
  GoalLabel g;
  g.behavior_ = behavior;
  return g;
}

bool GoalLabel::fits(Speaker speaker) const {
  return speaker == Speaker::counselor ? skill_.has_value() : behavior_.has_value();
}

std::string_view to_string(CcmSlot slot) { return kCcmNames[static_cast<std::size_t>(slot)]; }

std::optional<CcmSlot> ccm_slot_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kCcmNames.size(); ++i) {
    if (kCcmNames[i] == name) return static_cast<CcmSlot>(i);
  }
  return std::nullopt;
}

std::string_view to_string(RecordingSection section) {
  return kSectionNames[static_cast<std::size_t>(section)];
}

std::string_view heading(RecordingSection section) {
  return kSectionHeadings[static_cast<std::size_t>(section)];
}

bool CaseRecording::complete() const {
  return std::all_of(sections.begin(), sections.end(),
                     [](const std::string& s) { return !text::trim(s).empty(); });
}

std::string_view to_string(SessionStatus status) {
  switch (status) {
    case SessionStatus::open: return "open";
    case SessionStatus::warned: return "warned";
    case SessionStatus::closed: return "closed";
  }
  return "open";
}

std::optional<SessionStatus> status_from_string(std::string_view text) {
  if (text == "open") return SessionStatus::open;
  if (text == "warned") return SessionStatus::warned;
  if (text == "closed") return SessionStatus::closed;
  return std::nullopt;
}

DialogueSession::DialogueSession(std::string session_id, int max_turns, Timestamp created_at)
    : id_(std::move(session_id)), max_turns_(max_turns), created_at_(created_at) {
  if (id_.empty()) throw Error(ErrorCode::invalid_argument, "session id is empty");
  if (max_turns_ < 1) {
    throw Error(ErrorCode::invalid_argument, "max_turns must be positive");
  }
}

const Utterance& DialogueSession::append(Speaker speaker, std::string_view text,
                                         std::optional<GoalLabel> goal) {
  if (status_ == SessionStatus::closed) {
    throw Error(ErrorCode::lifecycle, "session " + id_ + " is closed");
  }
  if (text::trim(text).empty()) {
    throw Error(ErrorCode::invalid_argument, "utterance text is blank");
  }
  if (goal && !goal->fits(speaker)) {
    throw Error(ErrorCode::invalid_argument,
                "goal label does not fit a " + std::string(to_string(speaker)) + " turn");
  }
  if (!utterances_.empty() && utterances_.back().speaker == speaker) {
    alternation_warning_ = true;
  }
  utterances_.push_back(Utterance{speaker, std::string(text), utterances_.size(), std::move(goal)});
  return utterances_.back();
}

void DialogueSession::add_recording(CaseRecording recording) {
  if (recording.turn_index >= utterances_.size() ||
      utterances_[recording.turn_index].speaker != Speaker::counselor) {
    throw Error(ErrorCode::invalid_argument,
                "recording turn " + std::to_string(recording.turn_index) +
                    " is not a counselor turn of session " + id_);
  }
  for (const auto& r : recordings_) {
    if (r.turn_index == recording.turn_index) {
      throw Error(ErrorCode::duplicate,
                  "turn " + std::to_string(recording.turn_index) + " already has a recording");
    }
  }
  recordings_.push_back(std::move(recording));
}

void DialogueSession::transition_to(SessionStatus next) {
  const bool ok = (status_ == SessionStatus::open && next != SessionStatus::open) ||
                  (status_ == SessionStatus::warned && next == SessionStatus::closed);
  if (!ok) {
    throw Error(ErrorCode::lifecycle, "session " + id_ + " cannot go from " +
                                          std::string(to_string(status_)) + " to " +
                                          std::string(to_string(next)));
  }
  status_ = next;
}

std::size_t DialogueSession::count(Speaker speaker) const {
  return static_cast<std::size_t>(std::count_if(
      utterances_.begin(), utterances_.end(),
      [speaker](const Utterance& u) { return u.speaker == speaker; }));
}

std::vector<std::string> DialogueSession::texts() const {
  std::vector<std::string> out;
  out.reserve(utterances_.size());
  for (const auto& u : utterances_) out.push_back(u.text);
  return out;
}

nlohmann::json to_json(const GoalLabel& goal) {
  if (goal.skill()) {
    return {{"skill", to_string(*goal.skill())},
            {"subtype", goal.subtype() ? nlohmann::json(to_string(*goal.subtype()))
                                       : nlohmann::json(nullptr)}};
  }
  return {{"behavior", to_string(*goal.behavior())}};
}

nlohmann::json to_json(const Utterance& u) {
  return {{"speaker", to_string(u.speaker)},
          {"text", u.text},
          {"goal", u.goal ? to_json(*u.goal) : nlohmann::json(nullptr)}};
}

nlohmann::json to_json(const CaseConceptualization& ccm) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < kCcmSlotCount; ++i) {
    j[std::string(kCcmNames[i])] = ccm.slots[i] ? nlohmann::json(*ccm.slots[i]) : nullptr;
  }
  return j;
}

nlohmann::json to_json(const CaseRecording& rec) {
  nlohmann::json j = {{"turn_index", rec.turn_index}};
  for (std::size_t i = 0; i < kRecordingSectionCount; ++i) {
    j[std::string(kSectionNames[i])] = rec.sections[i];
  }
  return j;
}

CaseRecording recording_from_json(const nlohmann::json& j) {
  CaseRecording rec;
  rec.turn_index = j.at("turn_index").get<std::size_t>();
  for (std::size_t i = 0; i < kRecordingSectionCount; ++i) {
    rec.sections[i] = j.at(std::string(kSectionNames[i])).get<std::string>();
  }
  return rec;
}

nlohmann::json to_json(const DialogueSession& session) {
  nlohmann::json turns = nlohmann::json::array();
  for (const auto& u : session.utterances()) turns.push_back(to_json(u));
  nlohmann::json recordings = nlohmann::json::array();
  for (const auto& r : session.recordings()) recordings.push_back(to_json(r));
  return {
      {"session_id", session.id()},
      {"status", to_string(session.status())},
      {"max_turns", session.max_turns()},
      {"created_at", format_iso8601(session.created_at())},
      {"st", session.st_state() ? stsp::to_json(*session.st_state(), false)
                                : nlohmann::json(nullptr)},
      {"ccm", session.conceptualization() ? to_json(*session.conceptualization())
                                          : nlohmann::json(nullptr)},
      {"turns", std::move(turns)},
      {"recordings", std::move(recordings)},
  };
}

}  // namespace stampsy::corpus
