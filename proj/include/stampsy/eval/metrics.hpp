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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "stampsy/backends/embed.hpp"
#include "stampsy/common/text.hpp"

// Reference-based generation metrics. Text is tokenized with text::tokenize;
// the default is one token per non-whitespace character.
namespace stampsy::eval {

inline constexpr text::TokenMode kMetricTokens = text::TokenMode::characters;
inline constexpr int kMaxBleuOrder = 4;

// Clipped n-gram counts of one candidate against its references.
struct BleuCounts {
  std::array<std::size_t, kMaxBleuOrder> matches{};
  std::array<std::size_t, kMaxBleuOrder> totals{};
  std::size_t candidate_length = 0;
  // Length of the reference closest to the candidate; the shorter one on ties.
  std::size_t reference_length = 0;

  BleuCounts& operator+=(const BleuCounts& other);
};

BleuCounts bleu_counts(std::span<const std::string> candidate,
                       std::span<const std::vector<std::string>> references);

// Cumulative BLEU-n with uniform weights and a brevity penalty. Orders the
// candidate is too short to have are left out of the geometric mean. Any
// order with zero matches gives 0.
double bleu_from_counts(const BleuCounts& counts, int n);

// Sentence BLEU-n. Throws invalid_argument for n outside 1..4 or when there
// are no references.
double bleu(std::string_view candidate, std::span<const std::string> references, int n,
            text::TokenMode mode = kMetricTokens);

struct GenerationPair {
  std::string candidate;
  std::vector<std::string> references;
};

// Corpus BLEU: counts summed over pairs before the precisions are taken.
double corpus_bleu(std::span<const GenerationPair> pairs, int n,
                   text::TokenMode mode = kMetricTokens);
// Mean of sentence BLEU over pairs.
double mean_sentence_bleu(std::span<const GenerationPair> pairs, int n,
                          text::TokenMode mode = kMetricTokens);

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b);

// LCS-based F1 (beta = 1).
double rouge_l(std::string_view candidate, std::string_view reference,
               text::TokenMode mode = kMetricTokens);

struct GenerationScores {
  std::size_t pairs = 0;
  double bleu1 = 0.0;
  double bleu2 = 0.0;
  double rouge_l = 0.0;  // mean over pairs, best reference per pair
  std::optional<double> embed_sim;
  bool corpus_level = true;
};

nlohmann::json to_json(const GenerationScores& s);

// BLEU-1/2, ROUGE-L and, with an embedder, the mean embedding cosine against
// the first reference. Throws invalid_argument when there are no pairs.
GenerationScores evaluate_generation(std::span<const GenerationPair> pairs,
                                     backends::Embedder* embedder = nullptr,
                                     bool corpus_level = true,
                                     text::TokenMode mode = kMetricTokens);

// {"candidate": str, "reference": str} or {"candidate": str, "references": [str]}.
// Throws schema_violation.
GenerationPair pair_from_json(const nlohmann::json& j);

// Reads JSONL {"candidate": str, "reference": str} or {"candidate", "references": [str]}.
// Throws schema_violation with the line number.
std::vector<GenerationPair> read_pairs(std::istream& in);

}  // namespace stampsy::eval
