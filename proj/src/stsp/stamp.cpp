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

#include "stampsy/stsp/stamp.hpp"

#include <array>

namespace stampsy::stsp {

namespace {

constexpr std::array<std::string_view, 4> kTimeOfDay = {
    "Clients will be more awake and energetic, making it a good time to recommend counseling "
    "methods that require focus.",
    "Clients' emotional state may be influenced by their activities throughout the day, such as "
    "work or school. They may need to cope with stress, so providing emotional support and "
    "relaxation techniques is beneficial.",
    "Emotions are more open, and conducive to deep exploration of inner issues. However, evening "
    "clients may be more tired, affecting their ability to process counseling content.",
    "Late night clients tend to be more emotional, with fragile and sensitive emotions, requiring "
    "greater empathy and a sense of security.",
};

constexpr std::array<std::string_view, 3> kWeather = {
    "May trigger melancholy or reflective moods, making it suitable for exploring inner distress.",
    "High temperatures may cause irritability, affecting concentration, making it suitable for "
    "discussing emotion management.",
    "Brings positive emotions, suitable for positive thinking and future planning.",
};

constexpr std::array<std::string_view, 4> kSeason = {
    "The season of renewal brings a sense of hope, ideal for discussing new beginnings and growth.",
    "Energetic but may also bring anxiety and stress, making it suitable for discussing stress "
    "management.",
    "Pleasant weather, suitable for reflection and adjustment, and discussing personal development "
    "and life balance.",
    "The cold season may trigger loneliness and depressive moods, making it suitable for deep "
    "exploration of emotional issues.",
};

constexpr std::array<std::string_view, 4> kLocation = {
    "Provides a strong sense of security, making it suitable for discussing private and sensitive "
    "topics.",
    "May involve academic pressure and social issues, making it suitable for discussing "
    "adolescent-related topics.",
    "In a professional environment, suitable for discussing work stress, career planning, and life "
    "balance.",
    "Natural environments may help with stress relief and relaxation, making it suitable for casual "
    "conversations and emotional release.",
};

}  // namespace

nlohmann::json to_json(const Stamp& stamp) {
  nlohmann::json sources = nlohmann::json::array();
  for (const StampKey& k : stamp.sources) {
    sources.push_back({{"field", to_string(k.field)}, {"value", k.name()}});
  }
  return {{"text", stamp.text}, {"sources", sources}};
}

std::string_view impact_sentence(StampKey key) {
  const auto v = static_cast<std::size_t>(key.value);
  switch (key.field) {
    case Field::time_of_day: return kTimeOfDay.at(v);
    case Field::weather: return kWeather.at(v);
    case Field::season: return kSeason.at(v);
    case Field::location: return kLocation.at(v);
  }
  return {};
}

Stamp make_stamp(const SpatioTemporalState& state) {
  Stamp stamp;
  for (Field f : kFields) {
    auto key = state.key(f);
    if (!key) continue;
    if (!stamp.text.empty()) stamp.text += ' ';
    stamp.text += impact_sentence(*key);
    stamp.sources.push_back(*key);
  }
  return stamp;
}

}  // namespace stampsy::stsp
