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
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "stampsy/backends/retry.hpp"

namespace stampsy::backends {

struct ChatBackendSpec {
  std::string endpoint;    // http://host:port[/prefix]
  std::string model_name;
  std::size_t max_input_tokens = 4096;
  std::chrono::milliseconds timeout{30000};
  RetryPolicy retry;
  // Name of the environment variable holding a bearer token, if any.
  std::string api_key_env;

  // Throws config: max_input_tokens must be at least 512, retries >= 0.
  void validate() const;
};

struct ChatMessage {
  std::string role;  // system | user | assistant
  std::string content;
};

nlohmann::json to_json(std::span<const ChatMessage> messages);

// Chat completion client. Implementations must tolerate concurrent calls.
class ChatBackend {
 public:
  virtual ~ChatBackend() = default;
  virtual std::string name() const = 0;
  virtual std::size_t max_input_tokens() const = 0;
  // Non-empty reply text, or a stampsy::Error.
  virtual std::string complete(std::span<const ChatMessage> messages) = 0;
};

// Throws over_budget when the messages hold more tokens than the backend
// accepts. Backends call this before any network traffic.
void check_budget(const ChatBackend& backend, std::span<const ChatMessage> messages);

// Sends a rendered prompt as a single user message.
std::string chat_complete(ChatBackend& backend, std::string_view prompt);

}  // namespace stampsy::backends
