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

#include "stampsy/backends/embed.hpp"

#include <algorithm>
#include <cmath>

#include "stampsy/common/error.hpp"
#include "stampsy/common/kernels.hpp"

namespace stampsy::backends {

void EmbeddingBackendSpec::validate() const {
  if (dimension == 0) throw Error(ErrorCode::config, "embedding dimension must be positive");
  if (retry.max_retries < 0) throw Error(ErrorCode::config, "max_retries must be >= 0");
}

void check_embeddings(std::span<const Vector> vectors, std::size_t expected_count,
                      std::size_t dimension) {
  if (vectors.size() != expected_count) {
    throw Error(ErrorCode::contract_violation,
                "expected " + std::to_string(expected_count) + " vectors, got " +
                    std::to_string(vectors.size()));
  }
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dimension) {
      throw Error(ErrorCode::contract_violation,
                  "vector " + std::to_string(i) + " has dimension " +
                      std::to_string(vectors[i].size()) + ", expected " + std::to_string(dimension));
    }
    const double norm = std::sqrt(kernels::squared_norm(vectors[i]));
    if (std::abs(norm - 1.0) > kUnitNormTolerance) {
      throw Error(ErrorCode::contract_violation,
                  "vector " + std::to_string(i) + " has norm " + std::to_string(norm));
    }
  }
}

double embed_sim(Embedder& embedder, std::string_view candidate, std::string_view reference) {
  const std::vector<std::string> texts = {std::string(candidate), std::string(reference)};
  const auto vectors = embedder.embed(texts);
  check_embeddings(vectors, 2, embedder.dimension());
  return std::clamp(kernels::cosine(vectors[0], vectors[1]), -1.0, 1.0);
}

}  // namespace stampsy::backends
