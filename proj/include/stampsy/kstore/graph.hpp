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

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace stampsy::kstore {

enum class Relation { disorder_symptom, disorder_therapy, symptom_therapy, other };

std::string_view to_string(Relation r);
// Unrecognized names read as other.
Relation relation_from_string(std::string_view text);

struct KGEdge {
  std::string subject;
  Relation relation = Relation::other;
  std::string object;

  friend bool operator==(const KGEdge&, const KGEdge&) = default;
};

nlohmann::json to_json(const KGEdge& e);

// Psychological knowledge graph over disorder, symptom and therapy entities.
class KnowledgeGraph {
 public:
  // Returns false when the entity already exists.
  bool add_entity(const std::string& id);
  bool has_entity(const std::string& id) const;
  // Both ends must be registered and distinct. Returns false for an edge
  // that is already present.
  bool add_edge(const KGEdge& edge);

  // Edges touching `entity` in insertion order, optionally of one relation.
  // Throws not_found for an unregistered entity.
  std::vector<KGEdge> neighbors(const std::string& entity,
                                std::optional<Relation> relation = std::nullopt) const;

  std::size_t entity_count() const { return entities_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<KGEdge>& edges() const { return edges_; }

 private:
  std::unordered_map<std::string, std::vector<std::size_t>> incident_;
  std::vector<std::string> entities_;
  std::vector<KGEdge> edges_;
};

// JSONL edges {"s": str, "r": str, "o": str}; endpoints are registered on
// first sight. Throws schema_violation with the line number.
KnowledgeGraph read_graph(std::istream& in);
KnowledgeGraph load_graph(const std::filesystem::path& path);

}  // namespace stampsy::kstore
