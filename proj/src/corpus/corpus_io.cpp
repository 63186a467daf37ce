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

#include "stampsy/corpus/corpus_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>
#include <utility>

#include "stampsy/common/error.hpp"
#include "stampsy/common/text.hpp"

namespace stampsy::corpus {

namespace {

using nlohmann::json;

struct FieldError {
  std::string field;
  std::string message;
};

const json& require(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw FieldError{path + key, "missing"};
  return *it;
}

std::string require_string(const json& obj, const std::string& key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_string()) throw FieldError{path + key, "expected a string"};
  return v.get<std::string>();
}

std::optional<GoalLabel> parse_goal(const json& g, Speaker speaker, const std::string& path,
                                    std::vector<LoadIssue>* warnings) {
  if (g.is_null()) return std::nullopt;
  if (!g.is_object()) throw FieldError{path, "expected an object or null"};
  const bool has_skill = g.contains("skill");
  const bool has_behavior = g.contains("behavior");
  if (has_skill == has_behavior) {
    throw FieldError{path, "exactly one of \"skill\" and \"behavior\" is required"};
  }
  if (has_skill) {
    if (speaker != Speaker::counselor) throw FieldError{path + ".skill", "skill on a client turn"};
    const std::string raw = require_string(g, "skill", path + ".");
    auto skill = parse_skill(raw);
    if (!skill) {
      if (warnings) {
        warnings->push_back({0, path + ".skill", "unknown skill '" + raw + "' read as others"});
      }
      skill = HelpingSkill::others;
    }
    std::optional<GuidanceSubtype> subtype;
    if (auto it = g.find("subtype"); it != g.end() && !it->is_null()) {
      if (!it->is_string()) throw FieldError{path + ".subtype", "expected a string or null"};
      if (*skill != HelpingSkill::direct_guidance) {
        throw FieldError{path + ".subtype", "subtype is only valid with direct_guidance"};
      }
      subtype = parse_subtype(it->get<std::string>());
      if (!subtype) {
        throw FieldError{path + ".subtype", "unknown subtype '" + it->get<std::string>() + "'"};
      }
    }
    return GoalLabel::of_skill(*skill, subtype);
  }
  if (speaker != Speaker::client) {
    throw FieldError{path + ".behavior", "behavior on a counselor turn"};
  }
  const std::string raw = require_string(g, "behavior", path + ".");
  auto behavior = parse_behavior(raw);
  if (!behavior) throw FieldError{path + ".behavior", "unknown behavior '" + raw + "'"};
  return GoalLabel::of_behavior(*behavior);
}

DialogueSession parse_record(const json& record, std::vector<LoadIssue>* warnings) {
  if (!record.is_object()) throw FieldError{"", "record is not a JSON object"};
  std::string id = require_string(record, "session_id", "");
  if (id.empty()) throw FieldError{"session_id", "empty"};
  const json& turns = require(record, "turns", "");
  if (!turns.is_array()) throw FieldError{"turns", "expected an array"};

  // Loaded sessions are finished transcripts: the turn budget is their length.
  const int max_turns = std::max<int>(1, static_cast<int>(turns.size()));
  DialogueSession session(std::move(id), max_turns, Timestamp{});

  for (std::size_t i = 0; i < turns.size(); ++i) {
    const std::string path = "turns[" + std::to_string(i) + "]";
    const json& t = turns[i];
    if (!t.is_object()) throw FieldError{path, "expected an object"};
    const std::string speaker_raw = require_string(t, "speaker", path + ".");
    auto speaker = parse_speaker(speaker_raw);
    if (!speaker) throw FieldError{path + ".speaker", "unknown speaker '" + speaker_raw + "'"};
    const std::string text = require_string(t, "text", path + ".");
    if (text::trim(text).empty()) throw FieldError{path + ".text", "blank"};
    std::optional<GoalLabel> goal;
    if (auto it = t.find("goal"); it != t.end()) {
      goal = parse_goal(*it, *speaker, path + ".goal", warnings);
    }
    session.append(*speaker, text, std::move(goal));
  }
  if (session.alternation_warning() && warnings) {
    warnings->push_back({0, "turns", "speakers do not alternate"});
  }

  if (auto it = record.find("st"); it != record.end() && !it->is_null()) {
    if (!it->is_object()) throw FieldError{"st", "expected an object or null"};
    std::vector<std::string> unknown;
    auto state = stsp::state_from_json(*it, &unknown);
    if (!unknown.empty()) {
      throw FieldError{"st." + unknown.front(), "unknown value"};
    }
    session.set_st_state(std::move(state));
  }

  if (auto it = record.find("ccm"); it != record.end() && !it->is_null()) {
    if (!it->is_object()) throw FieldError{"ccm", "expected an object or null"};
    CaseConceptualization ccm;
    for (const auto& [key, value] : it->items()) {
      auto slot = ccm_slot_from_string(key);
      if (!slot) throw FieldError{"ccm." + key, "not one of the nine slots"};
      if (value.is_null()) continue;
      if (!value.is_string()) throw FieldError{"ccm." + key, "expected a string or null"};
      ccm[*slot] = value.get<std::string>();
    }
    session.set_conceptualization(std::move(ccm));
  }

  session.transition_to(SessionStatus::closed);
  return session;
}

}  // namespace

DialogueSession session_from_json(const nlohmann::json& record, std::vector<LoadIssue>* warnings) {
  try {
    return parse_record(record, warnings);
  } catch (const FieldError& e) {
    throw Error(ErrorCode::schema_violation,
                (e.field.empty() ? std::string("record") : e.field) + ": " + e.message);
  }
}

LoadResult read_corpus(std::istream& in) {
  LoadResult result;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      result.errors.push_back({line_no, "", std::string("invalid JSON: ") + e.what()});
      continue;
    }
    std::vector<LoadIssue> warnings;
    try {
      DialogueSession session = parse_record(record, &warnings);
      if (!seen.insert(session.id()).second) {
        result.errors.push_back({line_no, "session_id", "duplicate session_id '" + session.id() + "'"});
        continue;
      }
      for (auto& w : warnings) {
        w.line = line_no;
        result.warnings.push_back(std::move(w));
      }
      result.sessions.push_back(std::move(session));
    } catch (const FieldError& e) {
      result.errors.push_back({line_no, e.field, e.message});
    } catch (const Error& e) {
      result.errors.push_back({line_no, "", e.what()});
    }
  }
  return result;
}

LoadResult load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::not_found, "cannot open corpus file " + path.string());
  return read_corpus(in);
}

nlohmann::json to_record(const DialogueSession& session) {
  json turns = json::array();
  for (const auto& u : session.utterances()) turns.push_back(to_json(u));
  json st = nullptr;
  if (session.st_state()) st = stsp::to_json(*session.st_state(), false);
  json ccm = nullptr;
  if (session.conceptualization()) ccm = to_json(*session.conceptualization());
  return {{"session_id", session.id()}, {"st", st}, {"ccm", ccm}, {"turns", turns}};
}

void write_corpus(std::ostream& out, std::span<const DialogueSession> sessions) {
  for (const auto& s : sessions) out << to_record(s).dump() << '\n';
}

void save_corpus(const std::filesystem::path& path, std::span<const DialogueSession> sessions) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::not_found, "cannot write corpus file " + path.string());
  write_corpus(out, sessions);
}

}  // namespace stampsy::corpus
