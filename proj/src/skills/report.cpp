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

#include "stampsy/skills/report.hpp"

#include <cstdio>
#include <sstream>

#include "stampsy/common/error.hpp"

namespace stampsy::skills {

using corpus::HelpingSkill;
using corpus::index_of;

ClassificationReport classification_report(std::span<const HelpingSkill> gold,
                                           std::span<const HelpingSkill> predicted) {
  if (gold.size() != predicted.size()) {
    throw Error(ErrorCode::length_mismatch,
                "gold has " + std::to_string(gold.size()) + " labels, predictions " +
                    std::to_string(predicted.size()));
  }
  if (gold.empty()) throw Error(ErrorCode::invalid_argument, "no labels to score");
  ClassificationReport r;
  r.total = gold.size();
  std::size_t correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    ++r.per_class[index_of(gold[i])].support;
    ++r.per_class[index_of(predicted[i])].predicted;
    if (gold[i] == predicted[i]) {
      ++r.per_class[index_of(gold[i])].true_positives;
      ++correct;
    }
  }
  r.accuracy = static_cast<double>(correct) / static_cast<double>(r.total);
  for (auto& m : r.per_class) {
    if (m.support == 0) continue;
    const double tp = static_cast<double>(m.true_positives);
    const double p = m.predicted ? tp / static_cast<double>(m.predicted) : 0.0;
    const double rec = tp / static_cast<double>(m.support);
    m.precision = p;
    m.recall = rec;
    m.f1 = p + rec > 0 ? 2 * p * rec / (p + rec) : 0.0;
    const double w = static_cast<double>(m.support) / static_cast<double>(r.total);
    r.weighted_precision += w * p;
    r.weighted_recall += w * rec;
    r.weighted_f1 += w * *m.f1;
  }
  return r;
}

nlohmann::json to_json(const ClassificationReport& r) {
  auto opt = [](const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  nlohmann::json classes = nlohmann::json::object();
  for (HelpingSkill s : corpus::kAllSkills) {
    const auto& m = r[s];
    classes[std::string(to_string(s))] = {{"precision", opt(m.precision)},
                                          {"recall", opt(m.recall)},
                                          {"f1", opt(m.f1)},
                                          {"support", m.support}};
  }
  return {{"per_class", classes},
          {"total", r.total},
          {"accuracy", r.accuracy},
          {"weighted", {{"precision", r.weighted_precision},
                        {"recall", r.weighted_recall},
                        {"f1", r.weighted_f1}}}};
}

std::string render_table(const ClassificationReport& r) {
  std::ostringstream out;
  char buf[160];
  auto pct = [](const std::optional<double>& v) {
    char b[16];
    if (!v) return std::string("-");
    std::snprintf(b, sizeof b, "%.2f", *v * 100.0);
    return std::string(b);
  };
  std::snprintf(buf, sizeof buf, "%-20s %8s %8s %8s %8s\n", "Helping Skill", "Prec.", "Recall",
                "F1", "Support");
  out << buf;
  for (HelpingSkill s : corpus::kAllSkills) {
    const auto& m = r[s];
    std::snprintf(buf, sizeof buf, "%-20s %8s %8s %8s %8zu\n", std::string(to_string(s)).c_str(),
                  pct(m.precision).c_str(), pct(m.recall).c_str(), pct(m.f1).c_str(), m.support);
    out << buf;
  }
  std::snprintf(buf, sizeof buf, "%-20s %8s %8s %8s %8zu\n", "Weighted avg.",
                pct(r.weighted_precision).c_str(), pct(r.weighted_recall).c_str(),
                pct(r.weighted_f1).c_str(), r.total);
  out << buf;
  return out.str();
}

}  // namespace stampsy::skills
