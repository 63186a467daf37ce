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

#include <atomic>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>

#include "stampsy/backends/chat.hpp"
#include "stampsy/backends/embed.hpp"
#include "stampsy/skills/classify.hpp"

// Deterministic offline backends. Outputs are pure functions of (seed,
// input), which the golden replay tests depend on.
namespace stampsy::backends {

// Replies "[mock <8 hex>] <last line of the prompt>", the hex being a hash of
// the seed and every message. When the prompt carries numbered questions
// ("3. Title: question?"), the reply answers each as "3. Title: <answer>"
// instead.
class MockChatBackend final : public ChatBackend {
 public:
  explicit MockChatBackend(std::uint64_t seed = 0, std::size_t max_input_tokens = 32768)
      : seed_(seed), max_input_tokens_(max_input_tokens) {}

  std::string name() const override { return "mock"; }
  std::size_t max_input_tokens() const override { return max_input_tokens_; }
  std::string complete(std::span<const ChatMessage> messages) override;

 private:
  std::uint64_t seed_;
  std::size_t max_input_tokens_;
};

// Random projection of character 1..3-gram counts. Each n-gram owns a
// pseudo-random direction drawn from its hash and the seed; the text vector is
// the count-weighted sum of those directions, normalized.
class MockEmbedder final : public Embedder {
 public:
  explicit MockEmbedder(std::uint64_t seed = 0, std::size_t dimension = 64)
      : seed_(seed), dimension_(dimension) {}

  std::string name() const override { return "mock"; }
  std::size_t dimension() const override { return dimension_; }
  std::vector<Vector> embed(std::span<const std::string> texts) override;
  Vector embed_one(std::string_view text) const;

 private:
  std::uint64_t seed_;
  std::size_t dimension_;
};

// Wraps a chat backend and fails scripted calls, for fault-injection tests.
class FaultyChatBackend final : public ChatBackend {
 public:
  explicit FaultyChatBackend(std::shared_ptr<ChatBackend> inner) : inner_(std::move(inner)) {}

  // The next calls fail with these codes, in order.
  void fail_next(std::initializer_list<ErrorCode> codes);
  // Every call fails while set.
  void fail_always(bool on) { always_ = on; }
  int calls() const { return calls_; }

  std::string name() const override { return inner_->name(); }
  std::size_t max_input_tokens() const override { return inner_->max_input_tokens(); }
  std::string complete(std::span<const ChatMessage> messages) override;

 private:
  std::shared_ptr<ChatBackend> inner_;
  std::mutex mu_;
  std::deque<ErrorCode> pending_;
  std::atomic<bool> always_{false};
  std::atomic<int> calls_{0};
};

// Classifier double that always fails, to exercise the keyword fallback.
class FailingClassifier final : public skills::ClassifierBackend {
 public:
  std::string name() const override { return "failing"; }
  std::size_t max_input_tokens() const override { return 512; }
  skills::Distribution predict(std::span<const std::string>) override;
};

}  // namespace stampsy::backends
