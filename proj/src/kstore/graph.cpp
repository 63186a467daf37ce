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


#include "stampsy/kstore/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>

#include "stampsy/common/error.hpp"
#include "stampsy/common/text.hpp"

namespace stampsy::kstore {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::disorder_symptom: return "disorder_symptom";
    case Relation::disorder_therapy: return "disorder_therapy";
    case Relation::symptom_therapy: return "symptom_therapy";
    case Relation::other: return "other";
  }
  return "other";
}

Relation relation_from_string(std::string_view text) {
  std::string s = text::ascii_lower(text::trim(text));
  std::replace(s.begin(), s.end(), '-', '_');
  std::replace(s.begin(), s.end(), ' ', '_');
  if (s == "disorder_symptom") return Relation::disorder_symptom;
  if (s == "disorder_therapy") return Relation::disorder_therapy;
  if (s == "symptom_therapy") return Relation::symptom_therapy;
  return Relation::other;
}

nlohmann::json to_json(const KGEdge& e) {
  return {{"s", e.subject}, {"r", to_string(e.relation)}, {"o", e.object}};
}

bool KnowledgeGraph::add_entity(const std::string& id) {
  if (text::trim(id).empty()) throw Error(ErrorCode::invalid_argument, "entity id is empty");
  if (incident_.count(id)) return false;
  incident_.emplace(id, std::vector<std::size_t>{});
  entities_.push_back(id);
  return true;
}

bool KnowledgeGraph::has_entity(const std::string& id) const { return incident_.count(id) > 0; }

bool KnowledgeGraph::add_edge(const KGEdge& edge) {
  if (edge.subject == edge.object) {
    throw Error(ErrorCode::invalid_argument, "self-loop on entity '" + edge.subject + "'");
  }
  for (const auto* end : {&edge.subject, &edge.object}) {
    if (!has_entity(*end)) {
      throw Error(ErrorCode::not_found, "entity '" + *end + "' is not registered");
    }
  }
  for (std::size_t i : incident_[edge.subject]) {
    if (edges_[i] == edge) return false;
  }
  const std::size_t index = edges_.size();
  edges_.push_back(edge);
  incident_[edge.subject].push_back(index);
  incident_[edge.object].push_back(index);
  return true;
}

std::vector<KGEdge> KnowledgeGraph::neighbors(const std::string& entity,
                                              std::optional<Relation> relation) const {
  auto it = incident_.find(entity);
  if (it == incident_.end()) {
    throw Error(ErrorCode::not_found, "unknown entity '" + entity + "'");
  }
  std::vector<KGEdge> out;
  for (std::size_t i : it->second) {
    if (!relation || edges_[i].relation == *relation) out.push_back(edges_[i]);
  }
  return out;
}

KnowledgeGraph read_graph(std::istream& in) {
  KnowledgeGraph g;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      throw Error(ErrorCode::schema_violation, where + "invalid JSON");
    }
    for (const char* key : {"s", "r", "o"}) {
      if (!j.is_object() || !j.contains(key) || !j[key].is_string()) {
        throw Error(ErrorCode::schema_violation,
                    where + "missing string field \"" + std::string(key) + "\"");
      }
    }
    KGEdge e{j["s"].get<std::string>(), relation_from_string(j["r"].get<std::string>()),
             j["o"].get<std::string>()};
    try {
      g.add_entity(e.subject);
      g.add_entity(e.object);
      g.add_edge(e);
    } catch (const Error& err) {
      throw Error(ErrorCode::schema_violation, where + err.what());
    }
  }
  return g;
}

KnowledgeGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::not_found, "cannot open graph file " + path.string());
  return read_graph(in);
}

}  // namespace stampsy::kstore
