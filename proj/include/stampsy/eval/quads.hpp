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
#include <optional>
#include <span>

#include <json.hpp>

#include "stampsy/kstore/quadruple.hpp"

namespace stampsy::eval {

struct SlotValueScores {
  std::size_t pairs = 0;
  // Exact slot match.
  double slot_accuracy = 0.0;
  // Mean ROUGE-L F1 of predicted against gold values.
  double value_rouge_l = 0.0;
  // Exact stamp match over pairs whose gold quadruple has a stamp; null when
  // none does.
  std::optional<double> stamp_accuracy;
};

// Scores position-aligned extractions. Throws length_mismatch on unequal
// lengths and invalid_argument when empty.
SlotValueScores slot_value_scores(std::span<const kstore::KnowledgeQuadruple> gold,
                                  std::span<const kstore::KnowledgeQuadruple> predicted);

nlohmann::json to_json(const SlotValueScores& s);

}  // namespace stampsy::eval
