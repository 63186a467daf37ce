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


#include "stampsy/eval/ghsc.hpp"

#include <fstream>
#include <istream>

#include "stampsy/common/error.hpp"
#include "stampsy/embedded/ghsc_transcript_json.hpp"

namespace stampsy::eval {

namespace {

HelpingSkill skill_of(const nlohmann::json& v, const std::string& where) {
  if (!v.is_string()) throw Error(ErrorCode::schema_violation, where + ": expected a skill name");
  const auto name = v.get<std::string>();
  auto skill = corpus::parse_skill(name);
  if (!skill) throw Error(ErrorCode::schema_violation, where + ": unknown skill '" + name + "'");
  return *skill;
}

}  // namespace

const GhscTranscript& GhscTranscript::builtin() {
  static const GhscTranscript t =
      from_json(nlohmann::json::parse(embedded::ghsc_transcript_json));
  return t;
}

GhscTranscript GhscTranscript::from_json(const nlohmann::json& j) {
  GhscTranscript t;
  std::vector<std::string> said;
  try {
    for (const auto& ej : j.at("exchanges")) {
      GhscExchange ex;
      ex.index = ej.at("index").get<std::size_t>();
      ex.client = ej.at("client").get<std::string>();
      if (ej.contains("unscored")) ex.unscored = ej.at("unscored").get<std::vector<std::string>>();
      const std::string where = "exchange " + std::to_string(ex.index);
      for (const auto& uj : ej.at("helper_units")) {
        GhscUnit u;
        u.exchange = ex.index;
        u.text = uj.at("text").get<std::string>();
        u.label = uj.value("label", std::string());
        u.skill = skill_of(uj.at("skill"), where);
        said.push_back(u.text);
        t.contexts_.push_back(said);
        t.units_.push_back(u);
        ex.helper_units.push_back(std::move(u));
      }
      for (const auto& extra : ex.unscored) said.push_back(extra);
      said.push_back(ex.client);
      t.exchanges_.push_back(std::move(ex));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::schema_violation, std::string("GHSC transcript: ") + e.what());
  }
  if (t.units_.empty()) throw Error(ErrorCode::schema_violation, "GHSC transcript has no units");
  return t;
}

GhscTranscript GhscTranscript::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::not_found, "cannot open " + path.string());
  try {
    return from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::schema_violation, path.string() + ": " + e.what());
  }
}

std::vector<HelpingSkill> GhscTranscript::gold() const {
  std::vector<HelpingSkill> out;
  out.reserve(units_.size());
  for (const auto& u : units_) out.push_back(u.skill);
  return out;
}

std::vector<std::string> GhscTranscript::context_of(std::size_t unit) const {
  if (unit >= contexts_.size()) throw Error(ErrorCode::invalid_argument, "unit index out of range");
  return contexts_[unit];
}

GhscScore score_ghsc(const GhscTranscript& transcript, std::span<const HelpingSkill> predictions) {
  const auto gold = transcript.gold();
  if (predictions.size() != gold.size()) {
    throw Error(ErrorCode::length_mismatch,
                "expected " + std::to_string(gold.size()) + " predictions, got " +
                    std::to_string(predictions.size()));
  }
  GhscScore s;
  s.total = gold.size();
  for (std::size_t i = 0; i < gold.size(); ++i) s.correct += gold[i] == predictions[i] ? 1 : 0;
  s.accuracy = static_cast<double>(s.correct) / static_cast<double>(s.total);
  s.report = skills::classification_report(gold, predictions);
  return s;
}

double constant_baseline(const GhscTranscript& transcript, HelpingSkill skill) {
  const std::vector<HelpingSkill> all(transcript.units().size(), skill);
  return score_ghsc(transcript, all).accuracy;
}

std::vector<HelpingSkill> predict_ghsc(const GhscTranscript& transcript,
                                       skills::ClassifierBackend& backend, bool use_context) {
  std::vector<HelpingSkill> out;
  out.reserve(transcript.units().size());
  for (std::size_t i = 0; i < transcript.units().size(); ++i) {
    const auto context = transcript.context_of(i);
    out.push_back(skills::classify_skill(context, use_context, backend).predicted);
  }
  return out;
}

std::vector<HelpingSkill> predictions_from_json(const nlohmann::json& j) {
  const nlohmann::json* list = &j;
  if (j.is_object()) {
    auto it = j.find("predictions");
    if (it == j.end()) throw Error(ErrorCode::schema_violation, "missing \"predictions\"");
    list = &*it;
  }
  if (!list->is_array()) throw Error(ErrorCode::schema_violation, "predictions must be an array");
  std::vector<HelpingSkill> out;
  for (std::size_t i = 0; i < list->size(); ++i) {
    out.push_back(skill_of((*list)[i], "predictions[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<HelpingSkill> read_predictions(std::istream& in) {
  try {
    return predictions_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::schema_violation, e.what());
  }
}

nlohmann::json to_json(const GhscScore& s) {
  return {{"total", s.total},
          {"correct", s.correct},
          {"accuracy", s.accuracy},
          {"report", skills::to_json(s.report)}};
}

}  // namespace stampsy::eval
