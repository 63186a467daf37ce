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
#include <vector>

namespace stampsy::stsp {

struct NllLoss {
  // Mean over tokens of -log p(target). +inf when some target has p = 0.
  double value = 0.0;
  // First token whose target probability is 0.
  std::optional<std::size_t> zero_probability_at;
};

// Loss contract for a learned stamp generator. Throws length_mismatch on
// unequal lengths, invalid_argument on an empty sequence, a distribution not
// summing to 1 within 1e-6, or a target outside its distribution.
NllLoss stamp_nll_loss(std::span<const std::vector<double>> token_probabilities,
                       std::span<const std::size_t> target_tokens);

}  // namespace stampsy::stsp
