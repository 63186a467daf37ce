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

#include "stampsy/common/error.hpp"

namespace stampsy {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::not_found: return "not_found";
    case ErrorCode::schema_violation: return "schema_violation";
    case ErrorCode::duplicate: return "duplicate";
    case ErrorCode::length_mismatch: return "length_mismatch";
    case ErrorCode::config: return "config";
    case ErrorCode::lifecycle: return "lifecycle";
    case ErrorCode::budget_too_small: return "budget_too_small";
    case ErrorCode::over_budget: return "over_budget";
    case ErrorCode::backend_unavailable: return "backend_unavailable";
    case ErrorCode::timeout: return "timeout";
    case ErrorCode::service_error: return "service_error";
    case ErrorCode::contract_violation: return "contract_violation";
    case ErrorCode::conflict: return "conflict";
  }
  return "unknown";
}

}  // namespace stampsy
