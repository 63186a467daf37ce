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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace stampsy::stsp {

enum class TimeOfDay { morning, afternoon, evening, late_night };
enum class Weather { rainy, heatwave, sunny };
enum class Season { spring, summer, autumn, winter };
enum class Location { home, school, company, outdoors };

// Field order is fixed: it is the order stamps are concatenated in.
enum class Field { time_of_day, weather, season, location };
inline constexpr std::array<Field, 4> kFields = {Field::time_of_day, Field::weather,
                                                 Field::season, Field::location};

std::string_view to_string(Field field);
std::optional<Field> field_from_string(std::string_view name);

// Canonical value names per field, indexed by the enum's underlying value.
std::span<const std::string_view> field_values(Field field);

std::string_view to_string(TimeOfDay v);
std::string_view to_string(Weather v);
std::string_view to_string(Season v);
std::string_view to_string(Location v);

// A single (field, value) pair. This is also the stamp carried by a
// knowledge quadruple: the value names are unique across the four fields, so
// a bare value string identifies its field.
struct StampKey {
  Field field;
  int value;

  std::string_view name() const;
  friend bool operator==(const StampKey&, const StampKey&) = default;
};

// Accepts canonical names plus a few spellings seen in annotations
// ("late night", "night", "rainy day", "heat wave", "fall", "dormitory", ...).
std::optional<StampKey> parse_stamp_value(std::string_view text);
// Like parse_stamp_value, restricted to one field.
std::optional<int> parse_field_value(Field field, std::string_view text);

struct Evidence {
  Field field;
  std::string span;

  friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct SpatioTemporalState {
  std::optional<TimeOfDay> time_of_day;
  std::optional<Weather> weather;
  std::optional<Season> season;
  std::optional<Location> location;
  std::vector<Evidence> evidence;

  bool empty() const;
  std::optional<int> get(Field field) const;
  void set(StampKey key);
  void clear(Field field);
  std::optional<StampKey> key(Field field) const;

  // Field values only; evidence is provenance and does not take part.
  bool same_values(const SpatioTemporalState& other) const;
  friend bool operator==(const SpatioTemporalState&, const SpatioTemporalState&) = default;
};

// {"time_of_day": str|null, "location": ..., "weather": ..., "season": ...}
// plus "evidence": [{"field", "span"}] when non-empty.
nlohmann::json to_json(const SpatioTemporalState& state, bool with_evidence = true);
// Unknown value strings are reported through `unknown` (field names) and left null.
SpatioTemporalState state_from_json(const nlohmann::json& j,
                                    std::vector<std::string>* unknown = nullptr);

}  // namespace stampsy::stsp
