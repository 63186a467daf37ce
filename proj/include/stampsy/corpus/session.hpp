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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "stampsy/common/time.hpp"
#include "stampsy/corpus/taxonomy.hpp"
#include "stampsy/stsp/state.hpp"

namespace stampsy::corpus {

// Goal annotation of one turn: a helping skill on counselor turns, a client
// behavior on client turns. A guidance subtype only accompanies
// direct_guidance.
class GoalLabel {
 public:
  static GoalLabel of_skill(HelpingSkill skill,
                            std::optional<GuidanceSubtype> subtype = std::nullopt);
  static GoalLabel of_behavior(ClientBehavior behavior);

  const std::optional<HelpingSkill>& skill() const { return skill_; }
  const std::optional<ClientBehavior>& behavior() const { return behavior_; }
  const std::optional<GuidanceSubtype>& subtype() const { return subtype_; }

  bool fits(Speaker speaker) const;

  friend bool operator==(const GoalLabel&, const GoalLabel&) = default;

 private:
  GoalLabel() = default;

  std::optional<HelpingSkill> skill_;
  std::optional<ClientBehavior> behavior_;
  std::optional<GuidanceSubtype> subtype_;
};

struct Utterance {
  Speaker speaker;
  std::string text;
  std::size_t turn_index = 0;
  std::optional<GoalLabel> goal;

  friend bool operator==(const Utterance&, const Utterance&) = default;
};

enum class CcmSlot {
  profile_background,
  problem_presentation,
  comorbidity,
  stressors,
  treatments_received,
  strengths,
  risk_protective_summary,
  outcomes,
  barriers,
};

inline constexpr std::size_t kCcmSlotCount = 9;
std::string_view to_string(CcmSlot slot);
std::optional<CcmSlot> ccm_slot_from_string(std::string_view name);

// Nine-box case conceptualization record. The key set is fixed; each value is
// optional free text.
struct CaseConceptualization {
  std::array<std::optional<std::string>, kCcmSlotCount> slots;

  std::optional<std::string>& operator[](CcmSlot s) { return slots[static_cast<std::size_t>(s)]; }
  const std::optional<std::string>& operator[](CcmSlot s) const {
    return slots[static_cast<std::size_t>(s)];
  }

  friend bool operator==(const CaseConceptualization&, const CaseConceptualization&) = default;
};

enum class RecordingSection {
  explicit_content,
  implicit_content,
  defense_barriers,
  distortions,
  countertransference,
  personal_assessment,
};

inline constexpr std::size_t kRecordingSectionCount = 6;
std::string_view to_string(RecordingSection section);
// Heading used in prompts and parsing ("Explicit Content", ...).
std::string_view heading(RecordingSection section);

// The counselor's per-turn self-reflection, six sections in fixed order.
struct CaseRecording {
  std::size_t turn_index = 0;
  std::array<std::string, kRecordingSectionCount> sections;

  const std::string& operator[](RecordingSection s) const {
    return sections[static_cast<std::size_t>(s)];
  }
  bool complete() const;

  friend bool operator==(const CaseRecording&, const CaseRecording&) = default;
};

enum class SessionStatus { open, warned, closed };
std::string_view to_string(SessionStatus status);
std::optional<SessionStatus> status_from_string(std::string_view text);

class DialogueSession {
 public:
  DialogueSession(std::string session_id, int max_turns, Timestamp created_at);

  const std::string& id() const { return id_; }
  int max_turns() const { return max_turns_; }
  Timestamp created_at() const { return created_at_; }
  SessionStatus status() const { return status_; }
  std::span<const Utterance> utterances() const { return utterances_; }
  std::span<const CaseRecording> recordings() const { return recordings_; }
  const std::optional<stsp::SpatioTemporalState>& st_state() const { return st_state_; }
  const std::optional<CaseConceptualization>& conceptualization() const { return ccm_; }
  // Set when two consecutive utterances share a speaker. Such sessions are
  // kept, not rejected.
  bool alternation_warning() const { return alternation_warning_; }

  // Appends with the next turn index. Throws lifecycle on a closed session
  // and invalid_argument on blank text or a goal that does not fit the speaker.
  const Utterance& append(Speaker speaker, std::string_view text,
                          std::optional<GoalLabel> goal = std::nullopt);
  // The recording must reflect on an existing counselor turn, at most one
  // recording per counselor turn.
  void add_recording(CaseRecording recording);
  // open -> warned -> closed, or open -> closed.
  void transition_to(SessionStatus next);

  void set_st_state(std::optional<stsp::SpatioTemporalState> state) { st_state_ = std::move(state); }
  void set_conceptualization(std::optional<CaseConceptualization> ccm) { ccm_ = std::move(ccm); }

  std::size_t count(Speaker speaker) const;
  std::vector<std::string> texts() const;

  friend bool operator==(const DialogueSession&, const DialogueSession&) = default;

 private:
  std::string id_;
  int max_turns_;
  Timestamp created_at_;
  SessionStatus status_ = SessionStatus::open;
  std::vector<Utterance> utterances_;
  std::vector<CaseRecording> recordings_;
  std::optional<stsp::SpatioTemporalState> st_state_;
  std::optional<CaseConceptualization> ccm_;
  bool alternation_warning_ = false;
};

nlohmann::json to_json(const GoalLabel& goal);
nlohmann::json to_json(const Utterance& u);
nlohmann::json to_json(const CaseConceptualization& ccm);
nlohmann::json to_json(const CaseRecording& rec);
// Complete snapshot (status, recordings, timestamps included).
nlohmann::json to_json(const DialogueSession& session);

CaseRecording recording_from_json(const nlohmann::json& j);

}  // namespace stampsy::corpus
