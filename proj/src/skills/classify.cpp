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

#include "stampsy/skills/classify.hpp"

#include "stampsy/common/error.hpp"
#include "stampsy/common/text.hpp"

namespace stampsy::skills {

SkillPrediction classify_skill(std::span<const std::string> context, bool use_context,
                               ClassifierBackend& backend) {
  if (context.empty()) throw Error(ErrorCode::invalid_argument, "classification context is empty");
  std::span<const std::string> segments = context.last(1);
  bool truncated = false;
  if (use_context) {
    const std::size_t budget = backend.max_input_tokens();
    std::size_t used = text::count_tokens(context.back());
    std::size_t first = context.size() - 1;
    while (first > 0) {
      const std::size_t t = text::count_tokens(context[first - 1]);
      if (used + t > budget) break;
      used += t;
      --first;
    }
    truncated = first > 0;
    segments = context.subspan(first);
  }
  SkillPrediction p = SkillPrediction::from(backend.predict(segments), use_context, backend.name());
  p.truncated = truncated;
  return p;
}

}  // namespace stampsy::skills
