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

#include <chrono>
#include <functional>

#include "stampsy/common/error.hpp"

namespace stampsy::backends {

struct RetryPolicy {
  int max_retries = 2;
  std::chrono::milliseconds backoff{200};
  double multiplier = 2.0;
};

using Sleeper = std::function<void(std::chrono::milliseconds)>;
Sleeper real_sleeper();

// Unavailable services (connection failures, 5xx, 429) and timeouts are
// worth retrying; everything else is permanent.
bool is_transient(const Error& e);

// Calls `attempt` until it returns, at most max_retries + 1 times, sleeping
// backoff * multiplier^k between tries. Permanent errors and the last
// transient error propagate. `attempts`, when given, receives the number of
// calls made.
template <typename F>
auto with_retry(const RetryPolicy& policy, F&& attempt, const Sleeper& sleep = real_sleeper(),
                int* attempts = nullptr) -> decltype(attempt()) {
  auto delay = policy.backoff;
  for (int i = 0;; ++i) {
    if (attempts) *attempts = i + 1;
    try {
      return attempt();
    } catch (const Error& e) {
      if (!is_transient(e) || i >= policy.max_retries) throw;
    }
    sleep(delay);
    delay = std::chrono::milliseconds(
        static_cast<long long>(static_cast<double>(delay.count()) * policy.multiplier));
  }
}

}  // namespace stampsy::backends
