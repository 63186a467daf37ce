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

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stampsy::backends {
class Embedder;
}

namespace stampsy::kstore {

// Relevance of each document to a query; higher is better, 0 means no overlap.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual std::string name() const = 0;
  virtual std::vector<double> score(std::string_view query,
                                    std::span<const std::string> documents) const = 0;
};

// Dice coefficient over character bigram multisets of the normalized texts
// (lowercased, whitespace and punctuation removed). A one-character text
// counts as a single unigram.
class BigramScorer final : public Scorer {
 public:
  std::string name() const override { return "bigram"; }
  std::vector<double> score(std::string_view query,
                            std::span<const std::string> documents) const override;
};

double bigram_dice(std::string_view a, std::string_view b);

// Cosine similarity of embeddings, negatives clipped to 0.
class EmbeddingScorer final : public Scorer {
 public:
  explicit EmbeddingScorer(std::shared_ptr<backends::Embedder> embedder)
      : embedder_(std::move(embedder)) {}
  std::string name() const override;
  std::vector<double> score(std::string_view query,
                            std::span<const std::string> documents) const override;

 private:
  std::shared_ptr<backends::Embedder> embedder_;
};

}  // namespace stampsy::kstore
