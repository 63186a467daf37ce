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


#include "stampsy/eval/quads.hpp"

#include "stampsy/common/error.hpp"
#include "stampsy/eval/metrics.hpp"

namespace stampsy::eval {

SlotValueScores slot_value_scores(std::span<const kstore::KnowledgeQuadruple> gold,
                                  std::span<const kstore::KnowledgeQuadruple> predicted) {
  if (gold.size() != predicted.size()) {
    throw Error(ErrorCode::length_mismatch,
                std::to_string(gold.size()) + " gold quadruples but " +
                    std::to_string(predicted.size()) + " predicted");
  }
  if (gold.empty()) throw Error(ErrorCode::invalid_argument, "no quadruples to score");
  SlotValueScores s;
  s.pairs = gold.size();
  std::size_t slots = 0;
  std::size_t stamped = 0;
  std::size_t stamps = 0;
  double values = 0.0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i].slot == predicted[i].slot) ++slots;
    values += rouge_l(predicted[i].value, gold[i].value);
    if (gold[i].stamp) {
      ++stamped;
      if (predicted[i].stamp == gold[i].stamp) ++stamps;
    }
  }
  const double n = static_cast<double>(gold.size());
  s.slot_accuracy = static_cast<double>(slots) / n;
  s.value_rouge_l = values / n;
  if (stamped > 0) s.stamp_accuracy = static_cast<double>(stamps) / static_cast<double>(stamped);
  return s;
}

nlohmann::json to_json(const SlotValueScores& s) {
  return {{"pairs", s.pairs},
          {"slot_accuracy", s.slot_accuracy},
          {"value_rouge_l", s.value_rouge_l},
          {"stamp_accuracy",
           s.stamp_accuracy ? nlohmann::json(*s.stamp_accuracy) : nlohmann::json(nullptr)}};
}

}  // namespace stampsy::eval
