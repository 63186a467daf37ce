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

#include <stdexcept>
#include <string>
#include <string_view>

namespace stampsy {

enum class ErrorCode {
  invalid_argument,
  not_found,
  schema_violation,
  duplicate,
  length_mismatch,
  config,
  lifecycle,          // operation not allowed in the session's current status
  budget_too_small,   // mandatory prompt sections exceed the token budget
  over_budget,        // prompt larger than the backend accepts
  backend_unavailable,
  timeout,
  service_error,      // permanent failure reported by a remote service
  contract_violation, // a backend answered, but not in the agreed shape
  conflict,           // stale sequence number on a concurrent write
};

std::string_view to_string(ErrorCode code);

// Every failure the library reports is a stampsy::Error. The code is what
// callers branch on (the HTTP layer maps it to a status); the message is for
// humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace stampsy
