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


#include "stampsy/kstore/scorer.hpp"

#include <algorithm>
#include <map>

#include "stampsy/backends/embed.hpp"
#include "stampsy/common/kernels.hpp"
#include "stampsy/common/text.hpp"

namespace stampsy::kstore {

namespace {

using Grams = std::map<std::u32string, std::size_t>;

Grams bigrams(std::string_view input, std::size_t* total) {
  const std::u32string s = text::normalize_for_ngrams(input);
  Grams grams;
  *total = 0;
  if (s.size() == 1) {
    grams[s] = 1;
    *total = 1;
    return grams;
  }
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    ++grams[s.substr(i, 2)];
    ++*total;
  }
  return grams;
}

double dice(const Grams& a, std::size_t na, const Grams& b, std::size_t nb) {
  if (na + nb == 0) return 0.0;
  std::size_t common = 0;
  for (const auto& [gram, count] : a) {
    auto it = b.find(gram);
    if (it != b.end()) common += std::min(count, it->second);
  }
  return 2.0 * static_cast<double>(common) / static_cast<double>(na + nb);
}

}  // namespace

double bigram_dice(std::string_view a, std::string_view b) {
  std::size_t na = 0, nb = 0;
  const Grams ga = bigrams(a, &na);
  const Grams gb = bigrams(b, &nb);
  return dice(ga, na, gb, nb);
}

std::vector<double> BigramScorer::score(std::string_view query,
                                        std::span<const std::string> documents) const {
  std::size_t nq = 0;
  const Grams gq = bigrams(query, &nq);
  std::vector<double> out;
  out.reserve(documents.size());
  for (const auto& doc : documents) {
    std::size_t nd = 0;
    const Grams gd = bigrams(doc, &nd);
    out.push_back(dice(gq, nq, gd, nd));
  }
  return out;
}

std::string EmbeddingScorer::name() const { return "embedding:" + embedder_->name(); }

std::vector<double> EmbeddingScorer::score(std::string_view query,
                                           std::span<const std::string> documents) const {
  if (documents.empty()) return {};
  std::vector<std::string> texts;
  texts.reserve(documents.size() + 1);
  texts.emplace_back(query);
  texts.insert(texts.end(), documents.begin(), documents.end());
  const auto vectors = embedder_->embed(texts);
  backends::check_embeddings(vectors, texts.size(), embedder_->dimension());
  std::vector<double> out;
  out.reserve(documents.size());
  for (std::size_t i = 1; i < vectors.size(); ++i) {
    out.push_back(std::max(0.0, kernels::cosine(vectors[0], vectors[i])));
  }
  return out;
}

}  // namespace stampsy::kstore
