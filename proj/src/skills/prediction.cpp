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

#include "stampsy/skills/prediction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "stampsy/common/error.hpp"

namespace stampsy::skills {

std::size_t argmax(std::span<const double> values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

Distribution softmax(const Distribution& logits) {
  const double hi = *std::max_element(logits.begin(), logits.end());
  Distribution out{};
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::isinf(logits[i]) && logits[i] < 0 ? 0.0 : std::exp(logits[i] - hi);
    sum += out[i];
  }
  for (double& v : out) v /= sum;
  return out;
}

void check_distribution(const Distribution& p) {
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::contract_violation, "probability outside [0, 1]");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kProbabilityTolerance) {
    throw Error(ErrorCode::contract_violation,
                "probabilities sum to " + std::to_string(sum) + ", not 1");
  }
}

SkillPrediction SkillPrediction::from(const Distribution& p, bool used_context,
                                      std::string backend) {
  check_distribution(p);
  SkillPrediction out;
  out.probabilities = p;
  out.predicted = corpus::kAllSkills[argmax(p)];
  out.used_context = used_context;
  out.backend = std::move(backend);
  return out;
}

nlohmann::json distribution_to_json(const Distribution& p) {
  nlohmann::json j = nlohmann::json::object();
  for (HelpingSkill s : corpus::kAllSkills) j[std::string(to_string(s))] = p[corpus::index_of(s)];
  return j;
}

Distribution distribution_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::contract_violation, "probabilities is not an object");
  Distribution p{};
  for (const auto& [name, value] : j.items()) {
    auto skill = corpus::parse_skill(name);
    if (!skill) throw Error(ErrorCode::contract_violation, "unknown skill '" + name + "'");
    if (!value.is_number()) {
      throw Error(ErrorCode::contract_violation, "probability for '" + name + "' is not a number");
    }
    p[corpus::index_of(*skill)] = value.get<double>();
  }
  return p;
}

nlohmann::json to_json(const SkillPrediction& p) {
  return {{"predicted", to_string(p.predicted)},
          {"probabilities", distribution_to_json(p.probabilities)},
          {"used_context", p.used_context},
          {"truncated", p.truncated},
          {"degraded", p.degraded},
          {"backend", p.backend}};
}

bool needs_knowledge(HelpingSkill skill) {
  switch (skill) {
    case HelpingSkill::immediacy:
    case HelpingSkill::interpretations:
    case HelpingSkill::information_giving:
    case HelpingSkill::direct_guidance: return true;
    default: return false;
  }
}

}  // namespace stampsy::skills
