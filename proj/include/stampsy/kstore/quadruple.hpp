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
#include <vector>

#include <json.hpp>

#include "stampsy/stsp/state.hpp"

namespace stampsy::kstore {

enum class Domain { personal_information, spatial_temporal_information, psychological_knowledge };
inline constexpr std::size_t kDomainCount = 3;

std::string_view to_string(Domain d);
// Canonical names and the title-case spellings ("Personal Information", ...).
std::optional<Domain> domain_from_string(std::string_view text);

// [Domain | Slot | Value | Stamp]
struct KnowledgeQuadruple {
  Domain domain = Domain::psychological_knowledge;
  std::string slot;
  std::string value;
  std::optional<stsp::StampKey> stamp;

  // Throws invalid_argument on an empty slot or value.
  void validate() const;
  // "slot value", the text a query is scored against.
  std::string search_text() const;
  friend bool operator==(const KnowledgeQuadruple&, const KnowledgeQuadruple&) = default;
};

// [Domain|Slot|Value|Stamp], with "-" for a missing stamp.
std::string render(const KnowledgeQuadruple& q);

// {"domain": str, "slot": str, "value": str, "stamp": str|null}
nlohmann::json to_json(const KnowledgeQuadruple& q);
// Throws schema_violation; the message quotes the offending record.
KnowledgeQuadruple quad_from_json(const nlohmann::json& j);

// JSONL, one quadruple per line. Throws schema_violation with the line number
// on the first bad record; not_found when the file is missing.
std::vector<KnowledgeQuadruple> read_quads(std::istream& in);
std::vector<KnowledgeQuadruple> load_quads(const std::filesystem::path& path);

}  // namespace stampsy::kstore
