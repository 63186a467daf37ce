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


#include "stampsy/kstore/quadruple.hpp"

#include <array>
#include <fstream>
#include <istream>

#include "stampsy/common/error.hpp"
#include "stampsy/common/text.hpp"

namespace stampsy::kstore {

namespace {

constexpr std::array<std::string_view, kDomainCount> kDomainNames = {
    "personal_information", "spatial_temporal_information", "psychological_knowledge"};

std::string canonical(std::string_view text) {
  std::string s = text::ascii_lower(text::trim(text));
  for (char& c : s) {
    if (c == ' ' || c == '-') c = '_';
  }
  return s;
}

}  // namespace

std::string_view to_string(Domain d) { return kDomainNames[static_cast<std::size_t>(d)]; }

std::optional<Domain> domain_from_string(std::string_view text) {
  std::string s = canonical(text);
  if (s == "spatiotemporal_information" || s == "spatial_temporal") {
    return Domain::spatial_temporal_information;
  }
  if (s == "personal" || s == "persona") return Domain::personal_information;
  if (s == "psychological") return Domain::psychological_knowledge;
  for (std::size_t i = 0; i < kDomainNames.size(); ++i) {
    if (kDomainNames[i] == s) return static_cast<Domain>(i);
  }
  return std::nullopt;
}

void KnowledgeQuadruple::validate() const {
  if (text::trim(slot).empty()) throw Error(ErrorCode::invalid_argument, "quadruple slot is empty");
  if (text::trim(value).empty()) {
    throw Error(ErrorCode::invalid_argument, "quadruple value is empty");
  }
}

std::string KnowledgeQuadruple::search_text() const { return slot + " " + value; }

std::string render(const KnowledgeQuadruple& q) {
  std::string out = "[";
  out += to_string(q.domain);
  out += "|" + q.slot + "|" + q.value + "|";
  out += q.stamp ? std::string(q.stamp->name()) : std::string("-");
  out += "]";
  return out;
}

nlohmann::json to_json(const KnowledgeQuadruple& q) {
  return {{"domain", to_string(q.domain)},
          {"slot", q.slot},
          {"value", q.value},
          {"stamp", q.stamp ? nlohmann::json(q.stamp->name()) : nlohmann::json(nullptr)}};
}

KnowledgeQuadruple quad_from_json(const nlohmann::json& j) {
  auto fail = [&](const std::string& msg) {
    return Error(ErrorCode::schema_violation, msg + " in quadruple " + j.dump());
  };
  if (!j.is_object()) throw fail("expected an object");
  KnowledgeQuadruple q;
  for (const char* key : {"domain", "slot", "value"}) {
    if (!j.contains(key) || !j[key].is_string()) {
      throw fail(std::string("missing string field \"") + key + "\"");
    }
  }
  auto domain = domain_from_string(j["domain"].get<std::string>());
  if (!domain) throw fail("unknown domain");
  q.domain = *domain;
  q.slot = j["slot"].get<std::string>();
  q.value = j["value"].get<std::string>();
  if (auto it = j.find("stamp"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) throw fail("stamp must be a string or null");
    q.stamp = stsp::parse_stamp_value(it->get<std::string>());
    if (!q.stamp) throw fail("invalid stamp value '" + it->get<std::string>() + "'");
  }
  if (text::trim(q.slot).empty()) throw fail("empty slot");
  if (text::trim(q.value).empty()) throw fail("empty value");
  return q;
}

std::vector<KnowledgeQuadruple> read_quads(std::istream& in) {
  std::vector<KnowledgeQuadruple> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    try {
      out.push_back(quad_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::parse_error&) {
      throw Error(ErrorCode::schema_violation, "line " + std::to_string(line_no) + ": invalid JSON");
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<KnowledgeQuadruple> load_quads(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::not_found, "cannot open quadruple file " + path.string());
  return read_quads(in);
}

}  // namespace stampsy::kstore
