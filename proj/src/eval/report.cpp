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


#include "stampsy/eval/report.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

namespace stampsy::eval {

namespace {

std::string cell(const std::optional<double>& v, double scale) {
  if (!v) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", *v * scale);
  return buf;
}

}  // namespace

nlohmann::json to_json(const EvalReport& r) {
  auto opt = [](const auto& v) { return v ? to_json(*v) : nlohmann::json(nullptr); };
  return {{"system", r.system},
          {"ghsc", opt(r.ghsc)},
          {"stsp_accuracy", r.stsp_accuracy ? nlohmann::json(*r.stsp_accuracy) : nullptr},
          {"generation", opt(r.generation)},
          {"quads", opt(r.quads)},
          {"rubric", opt(r.rubric)}};
}

std::string render_table(const EvalReport& r) {
  const std::vector<std::string> header = {"System", "GHSC",  "STSP",  "BLEU-1",
                                           "BLEU-2", "ROUGE-L", "EmbSim", "Rel.",
                                           "Info.",  "Human.", "Help.", "Emp."};
  std::vector<std::string> row = {r.system};
  row.push_back(cell(r.ghsc ? std::optional(r.ghsc->accuracy) : std::nullopt, 100.0));
  row.push_back(cell(r.stsp_accuracy, 100.0));
  const auto& g = r.generation;
  row.push_back(cell(g ? std::optional(g->bleu1) : std::nullopt, 100.0));
  row.push_back(cell(g ? std::optional(g->bleu2) : std::nullopt, 100.0));
  row.push_back(cell(g ? std::optional(g->rouge_l) : std::nullopt, 100.0));
  row.push_back(cell(g ? g->embed_sim : std::nullopt, 100.0));
  for (RubricDimension d : kAllRubricDimensions) {
    row.push_back(cell(r.rubric ? std::optional(r.rubric->means[static_cast<std::size_t>(d)])
                                : std::nullopt,
                       1.0));
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      char buf[64];
      std::snprintf(buf, sizeof buf, i == 0 ? "%-12s" : " | %7s", cells[i].c_str());
      out << buf;
    }
    out << '\n';
  };
  line(header);
  line(row);
  return out.str();
}

}  // namespace stampsy::eval
