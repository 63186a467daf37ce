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

#include "stampsy/stsp/loss.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "stampsy/common/error.hpp"

namespace stampsy::stsp {

NllLoss stamp_nll_loss(std::span<const std::vector<double>> probs,
                       std::span<const std::size_t> targets) {
  if (probs.size() != targets.size()) {
    throw Error(ErrorCode::length_mismatch, std::to_string(probs.size()) +
                                                " distributions for " +
                                                std::to_string(targets.size()) + " targets");
  }
  if (probs.empty()) throw Error(ErrorCode::invalid_argument, "empty token sequence");
  NllLoss out;
  double sum = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const auto& dist = probs[i];
    double total = 0.0;
    for (double p : dist) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::invalid_argument,
                    "token " + std::to_string(i) + ": probability outside [0, 1]");
      }
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-6) {
      throw Error(ErrorCode::invalid_argument,
                  "token " + std::to_string(i) + ": distribution sums to " + std::to_string(total));
    }
    if (targets[i] >= dist.size()) {
      throw Error(ErrorCode::invalid_argument,
                  "token " + std::to_string(i) + ": target outside the vocabulary");
    }
    const double p = dist[targets[i]];
    if (p == 0.0) {
      if (!out.zero_probability_at) out.zero_probability_at = i;
      continue;
    }
    sum -= std::log(p);
  }
  out.value = out.zero_probability_at ? std::numeric_limits<double>::infinity()
                                      : sum / static_cast<double>(probs.size());
  return out;
}

}  // namespace stampsy::stsp
