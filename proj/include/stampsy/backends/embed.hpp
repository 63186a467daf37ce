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

#include "stampsy/backends/retry.hpp"

namespace stampsy::backends {

struct EmbeddingBackendSpec {
  std::string endpoint;
  std::string model_name;
  std::size_t dimension = 0;
  std::chrono::milliseconds timeout{30000};
  RetryPolicy retry;
  std::string api_key_env;

  void validate() const;
};

using Vector = std::vector<double>;

// Text embedding client returning unit-norm vectors of a fixed dimension.
class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual std::string name() const = 0;
  virtual std::size_t dimension() const = 0;
  virtual std::vector<Vector> embed(std::span<const std::string> texts) = 0;
};

inline constexpr double kUnitNormTolerance = 1e-6;

// Throws contract_violation unless there is one vector per text, each of the
// expected dimension and of unit norm.
void check_embeddings(std::span<const Vector> vectors, std::size_t expected_count,
                      std::size_t dimension);

// Cosine similarity of the two embeddings, in [-1, 1].
double embed_sim(Embedder& embedder, std::string_view candidate, std::string_view reference);

}  // namespace stampsy::backends
