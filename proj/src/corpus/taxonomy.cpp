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

#include "stampsy/corpus/taxonomy.hpp"

#include <string>
#include <utility>

#include "stampsy/common/error.hpp"
#include "stampsy/common/text.hpp"

namespace stampsy::corpus {

namespace {

// Lowercase, trim, collapse separators to '_' and drop trailing dots.
std::string canonicalize(std::string_view text) {
  std::string s = text::ascii_lower(text::trim(text));
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == ' ' || c == '-' || c == '_') {
      if (!out.empty() && out.back() != '_') out.push_back('_');
    } else if (c != '.') {
      out.push_back(c);
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

template <typename Enum, std::size_t N>
std::optional<Enum> lookup(std::string_view text,
                           const std::array<std::pair<std::string_view, Enum>, N>& table) {
  const std::string key = canonicalize(text);
  for (const auto& [name, value] : table) {
    if (name == key) return value;
  }
  return std::nullopt;
}

constexpr std::array<std::pair<std::string_view, HelpingSkill>, 37> kSkillNames = {{
    {"immediacy", HelpingSkill::immediacy},
    {"imme", HelpingSkill::immediacy},
    {"interpretations", HelpingSkill::interpretations},
    {"interpretation", HelpingSkill::interpretations},
    {"inptn", HelpingSkill::interpretations},
    {"intpn", HelpingSkill::interpretations},
    {"self_disclosures", HelpingSkill::self_disclosures},
    {"self_disclosure", HelpingSkill::self_disclosures},
    {"selfdisclosure", HelpingSkill::self_disclosures},
    {"open_questions", HelpingSkill::open_questions},
    {"open_question", HelpingSkill::open_questions},
    {"questions", HelpingSkill::open_questions},
    {"question", HelpingSkill::open_questions},
    {"feeling_reflection", HelpingSkill::feeling_reflection},
    {"reflection_of_feeling", HelpingSkill::feeling_reflection},
    {"reflection_of_feelings", HelpingSkill::feeling_reflection},
    {"feel", HelpingSkill::feeling_reflection},
    {"recognition", HelpingSkill::feeling_reflection},
    {"restatements", HelpingSkill::restatements},
    {"restatement", HelpingSkill::restatements},
    {"restatments", HelpingSkill::restatements},
    {"rest", HelpingSkill::restatements},
    {"information_giving", HelpingSkill::information_giving},
    {"infomation_giving", HelpingSkill::information_giving},
    {"information", HelpingSkill::information_giving},
    {"info", HelpingSkill::information_giving},
    {"direct_guidance", HelpingSkill::direct_guidance},
    {"guidance", HelpingSkill::direct_guidance},
    {"guid", HelpingSkill::direct_guidance},
    {"recommendation", HelpingSkill::direct_guidance},
    {"challenge", HelpingSkill::challenge},
    {"challenges", HelpingSkill::challenge},
    {"others", HelpingSkill::others},
    {"other", HelpingSkill::others},
    {"goodbye", HelpingSkill::others},
    {"small_talk", HelpingSkill::others},
    {"chitchat", HelpingSkill::others},
}};

constexpr std::array<std::pair<std::string_view, ClientBehavior>, 9> kBehaviorNames = {{
    {"impedance", ClientBehavior::impedance},
    {"resistance", ClientBehavior::impedance},
    {"agreeance", ClientBehavior::agreeance},
    {"agreement", ClientBehavior::agreeance},
    {"reasonable_inquiry", ClientBehavior::reasonable_inquiry},
    {"inquiry", ClientBehavior::reasonable_inquiry},
    {"narration", ClientBehavior::narration},
    {"cognitive_behavioral_exploration", ClientBehavior::cognitive_behavioral_exploration},
    {"cognitive_behavioural_exploration", ClientBehavior::cognitive_behavioral_exploration},
}};

constexpr std::array<std::pair<std::string_view, GuidanceSubtype>, 14> kSubtypeNames = {{
    {"place", GuidanceSubtype::place},
    {"recommend_place", GuidanceSubtype::place},
    {"recommended_place", GuidanceSubtype::place},
    {"relaxation", GuidanceSubtype::relaxation},
    {"relaxation_methods", GuidanceSubtype::relaxation},
    {"relaxing_method", GuidanceSubtype::relaxation},
    {"relaxing_ways", GuidanceSubtype::relaxation},
    {"lifestyle", GuidanceSubtype::lifestyle},
    {"lifestyles", GuidanceSubtype::lifestyle},
    {"therapy", GuidanceSubtype::therapy},
    {"therapies", GuidanceSubtype::therapy},
    {"treatment", GuidanceSubtype::therapy},
    {"music", GuidanceSubtype::music},
    {"recommend_music", GuidanceSubtype::music},
}};

}  // namespace

std::string_view to_string(Speaker s) {
  return s == Speaker::client ? "client" : "counselor";
}

std::string_view to_string(HelpingSkill s) {
  switch (s) {
    case HelpingSkill::immediacy: return "immediacy";
    case HelpingSkill::interpretations: return "interpretations";
    case HelpingSkill::self_disclosures: return "self_disclosures";
    case HelpingSkill::open_questions: return "open_questions";
    case HelpingSkill::feeling_reflection: return "feeling_reflection";
    case HelpingSkill::restatements: return "restatements";
    case HelpingSkill::information_giving: return "information_giving";
    case HelpingSkill::direct_guidance: return "direct_guidance";
    case HelpingSkill::challenge: return "challenge";
    case HelpingSkill::others: return "others";
  }
  return "others";
}

std::string_view short_label(HelpingSkill s) {
  switch (s) {
    case HelpingSkill::immediacy: return "Imme.";
    case HelpingSkill::interpretations: return "Inptn.";
    case HelpingSkill::self_disclosures: return "Self.";
    case HelpingSkill::open_questions: return "Ques.";
    case HelpingSkill::feeling_reflection: return "Feel.";
    case HelpingSkill::restatements: return "Rest.";
    case HelpingSkill::information_giving: return "Info.";
    case HelpingSkill::direct_guidance: return "Guid.";
    case HelpingSkill::challenge: return "Chal.";
    case HelpingSkill::others: return "Oth.";
  }
  return "Oth.";
}

std::string_view to_string(ClientBehavior b) {
  switch (b) {
    case ClientBehavior::impedance: return "impedance";
    case ClientBehavior::agreeance: return "agreeance";
    case ClientBehavior::reasonable_inquiry: return "reasonable_inquiry";
    case ClientBehavior::narration: return "narration";
    case ClientBehavior::cognitive_behavioral_exploration:
      return "cognitive_behavioral_exploration";
  }
  return "narration";
}

std::string_view to_string(GuidanceSubtype g) {
  switch (g) {
    case GuidanceSubtype::place: return "place";
    case GuidanceSubtype::relaxation: return "relaxation";
    case GuidanceSubtype::lifestyle: return "lifestyle";
    case GuidanceSubtype::therapy: return "therapy";
    case GuidanceSubtype::music: return "music";
  }
  return "place";
}

std::optional<Speaker> parse_speaker(std::string_view text) {
  const std::string key = canonicalize(text);
  if (key == "client" || key == "user" || key == "seeker") return Speaker::client;
  if (key == "counselor" || key == "counsellor" || key == "bot" || key == "helper" ||
      key == "therapist" || key == "assistant") {
    return Speaker::counselor;
  }
  return std::nullopt;
}

std::optional<HelpingSkill> parse_skill(std::string_view text) {
  return lookup(text, kSkillNames);
}

std::optional<ClientBehavior> parse_behavior(std::string_view text) {
  return lookup(text, kBehaviorNames);
}

std::optional<GuidanceSubtype> parse_subtype(std::string_view text) {
  return lookup(text, kSubtypeNames);
}

HelpingSkill skill_from_string(std::string_view text) {
  for (HelpingSkill s : kAllSkills) {
    if (to_string(s) == text) return s;
  }
  throw Error(ErrorCode::invalid_argument, "unknown helping skill '" + std::string(text) + "'");
}

}  // namespace stampsy::corpus
