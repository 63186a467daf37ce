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

#include "stampsy/stsp/state.hpp"

#include <utility>

#include "stampsy/common/error.hpp"
#include "stampsy/common/text.hpp"

namespace stampsy::stsp {

namespace {

constexpr std::array<std::string_view, 4> kTimeNames = {"morning", "afternoon", "evening",
                                                        "late_night"};
constexpr std::array<std::string_view, 3> kWeatherNames = {"rainy", "heatwave", "sunny"};
constexpr std::array<std::string_view, 4> kSeasonNames = {"spring", "summer", "autumn",
                                                          "winter"};
constexpr std::array<std::string_view, 4> kLocationNames = {"home", "school", "company",
                                                            "outdoors"};

struct Alias {
  std::string_view text;
  Field field;
  int value;
};

// Matched after lowercasing and mapping '-' and ' ' to '_'.
constexpr std::array<Alias, 16> kAliases = {{
    {"late_night", Field::time_of_day, 3},
    {"latenight", Field::time_of_day, 3},
    {"night", Field::time_of_day, 3},
    {"midnight", Field::time_of_day, 3},
    {"noon", Field::time_of_day, 1},
    {"rain", Field::weather, 0},
    {"rainy_day", Field::weather, 0},
    {"heat_wave", Field::weather, 1},
    {"heatwaves", Field::weather, 1},
    {"sunny_day", Field::weather, 2},
    {"fall", Field::season, 2},
    {"dormitory", Field::location, 1},
    {"dorm", Field::location, 1},
    {"office", Field::location, 2},
    {"work", Field::location, 2},
    {"outdoor", Field::location, 3},
}};

std::string canonicalize(std::string_view text) {
  std::string s = text::ascii_lower(text::trim(text));
  for (char& c : s) {
    if (c == '-' || c == ' ') c = '_';
  }
  return s;
}

}  // namespace

std::string_view to_string(Field field) {
  switch (field) {
    case Field::time_of_day: return "time_of_day";
    case Field::weather: return "weather";
    case Field::season: return "season";
    case Field::location: return "location";
  }
  return "time_of_day";
}

std::optional<Field> field_from_string(std::string_view name) {
  for (Field f : kFields) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::span<const std::string_view> field_values(Field field) {
  switch (field) {
    case Field::time_of_day: return kTimeNames;
    case Field::weather: return kWeatherNames;
    case Field::season: return kSeasonNames;
    case Field::location: return kLocationNames;
  }
  return {};
}

std::string_view to_string(TimeOfDay v) { return kTimeNames[static_cast<std::size_t>(v)]; }
std::string_view to_string(Weather v) { return kWeatherNames[static_cast<std::size_t>(v)]; }
std::string_view to_string(Season v) { return kSeasonNames[static_cast<std::size_t>(v)]; }
std::string_view to_string(Location v) { return kLocationNames[static_cast<std::size_t>(v)]; }

std::string_view StampKey::name() const {
  return field_values(field)[static_cast<std::size_t>(value)];
}

std::optional<int> parse_field_value(Field field, std::string_view text) {
  const std::string s = canonicalize(text);
  const auto names = field_values(field);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == s) return static_cast<int>(i);
  }
  for (const Alias& a : kAliases) {
    if (a.field == field && a.text == s) return a.value;
  }
  return std::nullopt;
}

std::optional<StampKey> parse_stamp_value(std::string_view text) {
  const std::string s = canonicalize(text);
  for (Field f : kFields) {
    const auto names = field_values(f);
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == s) return StampKey{f, static_cast<int>(i)};
    }
  }
  for (const Alias& a : kAliases) {
    if (a.text == s) return StampKey{a.field, a.value};
  }
  return std::nullopt;
}

bool SpatioTemporalState::empty() const {
  return !time_of_day && !weather && !season && !location;
}

std::optional<int> SpatioTemporalState::get(Field field) const {
  switch (field) {
    case Field::time_of_day:
      return time_of_day ? std::optional<int>(static_cast<int>(*time_of_day)) : std::nullopt;
    case Field::weather:
      return weather ? std::optional<int>(static_cast<int>(*weather)) : std::nullopt;
    case Field::season:
      return season ? std::optional<int>(static_cast<int>(*season)) : std::nullopt;
    case Field::location:
      return location ? std::optional<int>(static_cast<int>(*location)) : std::nullopt;
  }
  return std::nullopt;
}

void SpatioTemporalState::set(StampKey key) {
  const auto size = static_cast<int>(field_values(key.field).size());
  if (key.value < 0 || key.value >= size) {
    throw Error(ErrorCode::invalid_argument, "stamp value out of range for field " +
                                                 std::string(to_string(key.field)));
  }
  switch (key.field) {
    case Field::time_of_day: time_of_day = static_cast<TimeOfDay>(key.value); break;
    case Field::weather: weather = static_cast<Weather>(key.value); break;
    case Field::season: season = static_cast<Season>(key.value); break;
    case Field::location: location = static_cast<Location>(key.value); break;
  }
}

void SpatioTemporalState::clear(Field field) {
  switch (field) {
    case Field::time_of_day: time_of_day.reset(); break;
    case Field::weather: weather.reset(); break;
    case Field::season: season.reset(); break;
    case Field::location: location.reset(); break;
  }
}

std::optional<StampKey> SpatioTemporalState::key(Field field) const {
  if (auto v = get(field)) return StampKey{field, *v};
  return std::nullopt;
}

bool SpatioTemporalState::same_values(const SpatioTemporalState& other) const {
  return time_of_day == other.time_of_day && weather == other.weather &&
         season == other.season && location == other.location;
}

nlohmann::json to_json(const SpatioTemporalState& state, bool with_evidence) {
  nlohmann::json j = nlohmann::json::object();
  for (Field f : kFields) {
    if (auto k = state.key(f)) {
      j[std::string(to_string(f))] = std::string(k->name());
    } else {
      j[std::string(to_string(f))] = nullptr;
    }
  }
  if (with_evidence && !state.evidence.empty()) {
    nlohmann::json ev = nlohmann::json::array();
    for (const Evidence& e : state.evidence) {
      ev.push_back({{"field", std::string(to_string(e.field))}, {"span", e.span}});
    }
    j["evidence"] = std::move(ev);
  }
  return j;
}

SpatioTemporalState state_from_json(const nlohmann::json& j, std::vector<std::string>* unknown) {
  SpatioTemporalState state;
  if (!j.is_object()) return state;
  for (Field f : kFields) {
    const std::string name(to_string(f));
    auto it = j.find(name);
    if (it == j.end() || it->is_null()) continue;
    if (!it->is_string()) {
      if (unknown) unknown->push_back(name);
      continue;
    }
    const std::string raw = it->get<std::string>();
    if (auto v = parse_field_value(f, raw)) {
      state.set(StampKey{f, *v});
    } else if (unknown) {
      unknown->push_back(name);
    }
  }
  if (auto it = j.find("evidence"); it != j.end() && it->is_array()) {
    for (const auto& e : *it) {
      auto field = field_from_string(e.value("field", ""));
      if (field) state.evidence.push_back({*field, e.value("span", "")});
    }
  }
  return state;
}

}  // namespace stampsy::stsp
