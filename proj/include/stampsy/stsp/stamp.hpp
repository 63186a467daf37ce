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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "stampsy/stsp/state.hpp"

namespace stampsy::stsp {

struct Stamp {
  std::string text;
  std::vector<StampKey> sources;

  bool empty() const { return text.empty(); }
  friend bool operator==(const Stamp&, const Stamp&) = default;
};

nlohmann::json to_json(const Stamp& stamp);

// Counseling-impact sentence for one (field, value).
std::string_view impact_sentence(StampKey key);

// Impact sentences of the non-null fields joined by single spaces, in field
// order. An all-null state gives an empty stamp.
Stamp make_stamp(const SpatioTemporalState& state);

// Stamp generation strategy. The rule-based generator is the default; a
// learned generator served over HTTP plugs in behind the same call.
class StampGenerator {
 public:
  virtual ~StampGenerator() = default;
  virtual std::string name() const = 0;
  virtual Stamp generate(const SpatioTemporalState& state,
                         std::span<const std::string> context) = 0;
};

class TemplateStampGenerator final : public StampGenerator {
 public:
  std::string name() const override { return "template"; }
  Stamp generate(const SpatioTemporalState& state, std::span<const std::string>) override {
    return make_stamp(state);
  }
};

}  // namespace stampsy::stsp
