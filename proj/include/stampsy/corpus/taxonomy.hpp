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
#include <string_view>

// Closed label sets for counselor and client turns (Hill's category system).
namespace stampsy::corpus {

enum class Speaker { client, counselor };

// Declaration order is load-bearing: argmax ties resolve to the earliest
// entry, and per-skill tables are indexed by the underlying value.
enum class HelpingSkill {
  immediacy,
  interpretations,
  self_disclosures,
  open_questions,
  feeling_reflection,
  restatements,
  information_giving,
  direct_guidance,
  challenge,  // only labeled in the GHSC transcript, never generated
  others,
};

inline constexpr std::size_t kSkillCount = 10;
inline constexpr std::array<HelpingSkill, kSkillCount> kAllSkills = {
    HelpingSkill::immediacy,          HelpingSkill::interpretations,
    HelpingSkill::self_disclosures,   HelpingSkill::open_questions,
    HelpingSkill::feeling_reflection, HelpingSkill::restatements,
    HelpingSkill::information_giving, HelpingSkill::direct_guidance,
    HelpingSkill::challenge,          HelpingSkill::others};

enum class ClientBehavior {
  impedance,
  agreeance,
  reasonable_inquiry,
  narration,
  cognitive_behavioral_exploration,
};

inline constexpr std::array<ClientBehavior, 5> kAllBehaviors = {
    ClientBehavior::impedance, ClientBehavior::agreeance, ClientBehavior::reasonable_inquiry,
    ClientBehavior::narration, ClientBehavior::cognitive_behavioral_exploration};

// Recommendation kinds of direct guidance.
enum class GuidanceSubtype { place, relaxation, lifestyle, therapy, music };

inline constexpr std::array<GuidanceSubtype, 5> kAllSubtypes = {
    GuidanceSubtype::place, GuidanceSubtype::relaxation, GuidanceSubtype::lifestyle,
    GuidanceSubtype::therapy, GuidanceSubtype::music};

constexpr std::size_t index_of(HelpingSkill s) { return static_cast<std::size_t>(s); }

std::string_view to_string(Speaker s);
std::string_view to_string(HelpingSkill s);
std::string_view to_string(ClientBehavior b);
std::string_view to_string(GuidanceSubtype g);

// Short column labels used in report tables ("Imme.", "Inptn.", ...).
std::string_view short_label(HelpingSkill s);

// Canonical names and the label spellings found in annotations and the GHSC
// transcript ("Questions", "Restatments", "Reflection of feeling", ...).
std::optional<Speaker> parse_speaker(std::string_view text);
std::optional<HelpingSkill> parse_skill(std::string_view text);
std::optional<ClientBehavior> parse_behavior(std::string_view text);
std::optional<GuidanceSubtype> parse_subtype(std::string_view text);

// Strict canonical lookups; throw stampsy::Error(invalid_argument).
HelpingSkill skill_from_string(std::string_view text);

}  // namespace stampsy::corpus
