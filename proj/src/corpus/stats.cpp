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

#include "stampsy/corpus/stats.hpp"

#include <algorithm>
#include <bitset>
#include <cstdio>
#include <sstream>

namespace stampsy::corpus {

namespace {

std::optional<double> ratio(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

nlohmann::json opt(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json to_json(const GoalCount& g) {
  return {{"count", g.count}, {"mean_length", opt(g.mean_length())}};
}

std::string fmt(const std::optional<double>& v) {
  if (!v) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", *v);
  return buf;
}

void row(std::ostringstream& out, std::string_view label, const std::string& value) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-44.*s %12s\n", static_cast<int>(label.size()), label.data(),
                value.c_str());
  out << buf;
}

void goal_row(std::ostringstream& out, std::string_view label, const GoalCount& g) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "  %-30.*s %10zu %12s\n", static_cast<int>(label.size()),
                label.data(), g.count, fmt(g.mean_length()).c_str());
  out << buf;
}

}  // namespace

std::string_view to_string(DialogueType t) {
  switch (t) {
    case DialogueType::diagnosis: return "diagnosis";
    case DialogueType::qa: return "qa";
    case DialogueType::knowledge_grounded: return "knowledge_grounded";
    case DialogueType::recommendation: return "recommendation";
    case DialogueType::empathetic: return "empathetic";
  }
  return "empathetic";
}

std::optional<DialogueType> dialogue_type_of(HelpingSkill skill) {
  switch (skill) {
    case HelpingSkill::immediacy:
    case HelpingSkill::open_questions: return DialogueType::diagnosis;
    case HelpingSkill::interpretations: return DialogueType::qa;
    case HelpingSkill::information_giving: return DialogueType::knowledge_grounded;
    case HelpingSkill::direct_guidance: return DialogueType::recommendation;
    case HelpingSkill::feeling_reflection:
    case HelpingSkill::restatements:
    case HelpingSkill::self_disclosures: return DialogueType::empathetic;
    case HelpingSkill::challenge:
    case HelpingSkill::others: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<double> GoalCount::mean_length() const { return ratio(tokens, count); }

std::optional<double> StatsReport::mean_client_tokens() const {
  return ratio(client_tokens, client_utterances);
}
std::optional<double> StatsReport::mean_counselor_tokens() const {
  return ratio(counselor_tokens, counselor_utterances);
}
std::optional<double> StatsReport::mean_goals() const { return ratio(total_goals, dialogues); }
std::optional<double> StatsReport::mean_distinct_skills() const {
  return ratio(distinct_skill_sum, dialogues);
}
std::optional<double> StatsReport::mean_distinct_types() const {
  return ratio(distinct_type_sum, dialogues);
}

StatsReport corpus_stats(std::span<const DialogueSession> sessions, text::TokenMode mode) {
  StatsReport r;
  r.token_mode = mode;
  r.dialogues = sessions.size();
  for (const auto& session : sessions) {
    if (session.alternation_warning()) ++r.alternation_warnings;
    std::size_t goals = 0;
    std::bitset<kSkillCount> skills;
    std::bitset<kDialogueTypeCount> types;
    for (const auto& u : session.utterances()) {
      const std::size_t tokens = text::count_tokens(u.text, mode);
      if (u.speaker == Speaker::client) {
        ++r.client_utterances;
        r.client_tokens += tokens;
      } else {
        ++r.counselor_utterances;
        r.counselor_tokens += tokens;
      }
      if (!u.goal) {
        ++r.unlabeled_utterances;
        continue;
      }
      ++goals;
      const auto& skill = u.goal->skill();
      if (!skill) continue;
      ++r.labeled_counselor_utterances;
      skills.set(index_of(*skill));
      auto& sk = r.per_skill[index_of(*skill)];
      ++sk.count;
      sk.tokens += tokens;
      if (const auto& sub = u.goal->subtype()) {
        auto& st = r.per_subtype[static_cast<std::size_t>(*sub)];
        ++st.count;
        st.tokens += tokens;
      }
      if (auto type = dialogue_type_of(*skill)) {
        types.set(static_cast<std::size_t>(*type));
        auto& ty = r.per_type[static_cast<std::size_t>(*type)];
        ++ty.count;
        ty.tokens += tokens;
      }
    }
    r.total_goals += goals;
    r.max_goals = std::max(r.max_goals.value_or(0), goals);
    r.min_goals = r.min_goals ? std::min(*r.min_goals, goals) : goals;
    r.distinct_skill_sum += skills.count();
    r.distinct_type_sum += types.count();
  }
  return r;
}

nlohmann::json to_json(const StatsReport& r) {
  nlohmann::json per_skill = nlohmann::json::object();
  for (HelpingSkill s : kAllSkills) {
    per_skill[std::string(to_string(s))] = to_json(r.per_skill[index_of(s)]);
  }
  nlohmann::json per_subtype = nlohmann::json::object();
  for (GuidanceSubtype g : kAllSubtypes) {
    per_subtype[std::string(to_string(g))] = to_json(r.per_subtype[static_cast<std::size_t>(g)]);
  }
  nlohmann::json per_type = nlohmann::json::object();
  for (std::size_t i = 0; i < kDialogueTypeCount; ++i) {
    per_type[std::string(to_string(static_cast<DialogueType>(i)))] = to_json(r.per_type[i]);
  }
  auto opt_count = [](const std::optional<std::size_t>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  return {
      {"token_mode", text::to_string(r.token_mode)},
      {"dialogues", r.dialogues},
      {"client_utterances", r.client_utterances},
      {"counselor_utterances", r.counselor_utterances},
      {"labeled_counselor_utterances", r.labeled_counselor_utterances},
      {"unlabeled_utterances", r.unlabeled_utterances},
      {"alternation_warnings", r.alternation_warnings},
      {"mean_client_tokens", opt(r.mean_client_tokens())},
      {"mean_counselor_tokens", opt(r.mean_counselor_tokens())},
      {"mean_goals", opt(r.mean_goals())},
      {"max_goals", opt_count(r.max_goals)},
      {"min_goals", opt_count(r.min_goals)},
      {"mean_distinct_skills", opt(r.mean_distinct_skills())},
      {"mean_distinct_types", opt(r.mean_distinct_types())},
      {"per_skill", per_skill},
      {"per_subtype", per_subtype},
      {"per_type", per_type},
  };
}

std::string render_table(const StatsReport& r) {
  std::ostringstream out;
  auto count = [](std::size_t v) { return std::to_string(v); };
  auto opt_count = [](const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  row(out, "# of dialogues", count(r.dialogues));
  row(out, "# of utterances of client/counselor",
      count(r.client_utterances) + "/" + count(r.counselor_utterances));
  row(out, "Avg. # of tokens per client", fmt(r.mean_client_tokens()));
  row(out, "Avg. # of tokens per counselor", fmt(r.mean_counselor_tokens()));
  row(out, "Avg. # of goals per dialogue", fmt(r.mean_goals()));
  row(out, "Max. # of goals per dialogue", opt_count(r.max_goals));
  row(out, "Min. # of goals per dialogue", opt_count(r.min_goals));
  row(out, "Avg. # of distinct skills per dialogue", fmt(r.mean_distinct_skills()));
  row(out, "Avg. # of distinct dialogue types per dialogue", fmt(r.mean_distinct_types()));
  out << "\nGoal type                          # Num     Avg.Len.\n";
  for (std::size_t i = 0; i < kDialogueTypeCount; ++i) {
    goal_row(out, to_string(static_cast<DialogueType>(i)), r.per_type[i]);
    if (static_cast<DialogueType>(i) == DialogueType::recommendation) {
      for (GuidanceSubtype g : kAllSubtypes) {
        goal_row(out, "  " + std::string(to_string(g)), r.per_subtype[static_cast<std::size_t>(g)]);
      }
    }
  }
  out << "\nHelping skill\n";
  for (HelpingSkill s : kAllSkills) goal_row(out, to_string(s), r.per_skill[index_of(s)]);
  return out.str();
}

}  // namespace stampsy::corpus
