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

#include "stampsy/backends/chat.hpp"

#include "stampsy/common/error.hpp"
#include "stampsy/common/text.hpp"

namespace stampsy::backends {

void ChatBackendSpec::validate() const {
  if (max_input_tokens < 512) {
    throw Error(ErrorCode::config, "chat max_input_tokens must be at least 512");
  }
  if (retry.max_retries < 0) throw Error(ErrorCode::config, "max_retries must be >= 0");
  if (timeout.count() <= 0) throw Error(ErrorCode::config, "timeout must be positive");
}

nlohmann::json to_json(std::span<const ChatMessage> messages) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& m : messages) arr.push_back({{"role", m.role}, {"content", m.content}});
  return arr;
}

void check_budget(const ChatBackend& backend, std::span<const ChatMessage> messages) {
  std::size_t tokens = 0;
  for (const auto& m : messages) tokens += text::count_tokens(m.content);
  if (tokens > backend.max_input_tokens()) {
    throw Error(ErrorCode::over_budget, "prompt has " + std::to_string(tokens) +
                                            " tokens, backend " + backend.name() + " accepts " +
                                            std::to_string(backend.max_input_tokens()));
  }
}

std::string chat_complete(ChatBackend& backend, std::string_view prompt) {
  const ChatMessage message{"user", std::string(prompt)};
  return backend.complete(std::span<const ChatMessage>(&message, 1));
}

}  // namespace stampsy::backends
