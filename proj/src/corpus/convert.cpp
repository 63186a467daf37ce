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

#include "stampsy/corpus/convert.hpp"

#include <istream>
#include <iterator>
#include <string>

#include "stampsy/common/error.hpp"
#include "stampsy/common/text.hpp"

namespace stampsy::corpus {

namespace {

using nlohmann::json;

std::optional<GuidanceSubtype> recommendation_subtype(std::string_view what) {
  if (auto s = parse_subtype(what)) return s;
  const std::string lower = text::ascii_lower(what);
  if (text::contains(lower, "place")) return GuidanceSubtype::place;
  if (text::contains(lower, "relax")) return GuidanceSubtype::relaxation;
  if (text::contains(lower, "lifestyle")) return GuidanceSubtype::lifestyle;
  if (text::contains(lower, "treatment") || text::contains(lower, "therap")) {
    return GuidanceSubtype::therapy;
  }
  if (text::contains(lower, "music")) return GuidanceSubtype::music;
  return std::nullopt;
}

json convert_one(const json& raw, std::size_t record_no, std::vector<LoadIssue>& warnings) {
  if (!raw.is_object()) throw Error(ErrorCode::schema_violation, "record: not an object");
  json out;
  if (raw.contains("id") && raw["id"].is_string()) {
    out["session_id"] = raw["id"];
  } else if (raw.contains("id") && raw["id"].is_number_integer()) {
    out["session_id"] = std::to_string(raw["id"].get<long long>());
  } else {
    out["session_id"] = "session-" + std::to_string(record_no);
  }

  json st = json::object();
  bool any_st = false;
  for (stsp::Field f : stsp::kFields) {
    const std::string name(stsp::to_string(f));
    const std::string key = f == stsp::Field::time_of_day ? "time" : name;
    st[name] = nullptr;
    auto it = raw.find(key);
    if (it == raw.end() || !it->is_string()) continue;
    if (auto v = stsp::parse_field_value(f, it->get<std::string>())) {
      st[name] = std::string(stsp::field_values(f)[static_cast<std::size_t>(*v)]);
      any_st = true;
    } else {
      warnings.push_back({record_no, key, "unrecognised value dropped"});
    }
  }
  out["st"] = any_st ? st : json(nullptr);
  out["ccm"] = raw.contains("ccm") ? raw["ccm"] : json(nullptr);

  const json& dialog = raw.contains("dialog") ? raw["dialog"] : raw.value("turns", json::array());
  if (!dialog.is_array()) throw Error(ErrorCode::schema_violation, "dialog: expected an array");
  json turns = json::array();
  for (std::size_t i = 0; i < dialog.size(); ++i) {
    const json& t = dialog[i];
    const std::string role = t.value("role", t.value("speaker", ""));
    auto speaker = parse_speaker(role);
    if (!speaker) {
      throw Error(ErrorCode::schema_violation,
                  "dialog[" + std::to_string(i) + "].role: unknown role '" + role + "'");
    }
    json goal = nullptr;
    auto label_it = t.find("goal");
    if (label_it != t.end() && label_it->is_string() && !label_it->get<std::string>().empty()) {
      if (auto g = goal_from_label(*speaker, label_it->get<std::string>())) {
        goal = to_json(*g);
      } else {
        warnings.push_back({record_no, "dialog[" + std::to_string(i) + "].goal",
                            "unrecognised label '" + label_it->get<std::string>() + "' dropped"});
      }
    }
    turns.push_back({{"speaker", to_string(*speaker)},
                     {"text", t.value("content", t.value("text", ""))},
                     {"goal", goal}});
  }
  out["turns"] = std::move(turns);
  return out;
}

}  // namespace

std::optional<GoalLabel> goal_from_label(Speaker speaker, std::string_view label) {
  const std::string trimmed = text::trim(label);
  if (trimmed.empty()) return std::nullopt;
  if (speaker == Speaker::client) {
    if (auto b = parse_behavior(trimmed)) return GoalLabel::of_behavior(*b);
    return std::nullopt;
  }
  const auto colon = trimmed.find(':');
  if (colon != std::string::npos) {
    const std::string head = text::ascii_lower(text::trim(trimmed.substr(0, colon)));
    const std::string tail = text::trim(trimmed.substr(colon + 1));
    if (head == "recommendation" || head == "direct guidance" || head == "recommend") {
      return GoalLabel::of_skill(HelpingSkill::direct_guidance, recommendation_subtype(tail));
    }
  }
  if (auto s = parse_skill(trimmed)) return GoalLabel::of_skill(*s);
  return std::nullopt;
}

ConvertResult convert_export(std::istream& in) {
  ConvertResult result;
  const std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<json> raws;
  const std::string head = text::trim(content.substr(0, std::min<std::size_t>(content.size(), 64)));
  if (!head.empty() && head.front() == '[') {
    try {
      for (auto& r : json::parse(content)) raws.push_back(std::move(r));
    } catch (const json::parse_error& e) {
      result.errors.push_back({0, "", std::string("invalid JSON: ") + e.what()});
      return result;
    }
  } else {
    std::size_t start = 0;
    while (start < content.size()) {
      std::size_t end = content.find('\n', start);
      if (end == std::string::npos) end = content.size();
      const std::string line = content.substr(start, end - start);
      start = end + 1;
      if (text::trim(line).empty()) continue;
      try {
        raws.push_back(json::parse(line));
      } catch (const json::parse_error& e) {
        raws.push_back(json());
        result.errors.push_back({raws.size(), "", std::string("invalid JSON: ") + e.what()});
      }
    }
  }
  for (std::size_t i = 0; i < raws.size(); ++i) {
    if (raws[i].is_null()) continue;
    try {
      result.records.push_back(convert_one(raws[i], i + 1, result.warnings));
    } catch (const Error& e) {
      result.errors.push_back({i + 1, "", e.what()});
    }
  }
  return result;
}

}  // namespace stampsy::corpus
