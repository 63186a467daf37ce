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


#include "stampsy/eval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <map>

#include "stampsy/common/error.hpp"

namespace stampsy::eval {

namespace {

using Ngram = std::vector<std::string>;

std::map<Ngram, std::size_t> ngram_counts(std::span<const std::string> tokens, std::size_t n) {
  std::map<Ngram, std::size_t> out;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++out[Ngram(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return out;
}

void check_order(int n) {
  if (n < 1 || n > kMaxBleuOrder) {
    throw Error(ErrorCode::invalid_argument, "BLEU order must be between 1 and 4");
  }
}

std::vector<std::vector<std::string>> tokenize_all(std::span<const std::string> texts,
                                                   text::TokenMode mode) {
  std::vector<std::vector<std::string>> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(text::tokenize(t, mode));
  return out;
}

}  // namespace

BleuCounts& BleuCounts::operator+=(const BleuCounts& other) {
  for (int i = 0; i < kMaxBleuOrder; ++i) {
    matches[i] += other.matches[i];
    totals[i] += other.totals[i];
  }
  candidate_length += other.candidate_length;
  reference_length += other.reference_length;
  return *this;
}

BleuCounts bleu_counts(std::span<const std::string> candidate,
                       std::span<const std::vector<std::string>> references) {
  if (references.empty()) throw Error(ErrorCode::invalid_argument, "BLEU needs a reference");
  BleuCounts c;
  c.candidate_length = candidate.size();
  std::size_t best = references.front().size();
  for (const auto& r : references) {
    const auto d = [&](std::size_t len) {
      return len > c.candidate_length ? len - c.candidate_length : c.candidate_length - len;
    };
    if (d(r.size()) < d(best) || (d(r.size()) == d(best) && r.size() < best)) best = r.size();
  }
  c.reference_length = best;
  for (std::size_t n = 1; n <= static_cast<std::size_t>(kMaxBleuOrder); ++n) {
    const auto cand = ngram_counts(candidate, n);
    std::map<Ngram, std::size_t> max_ref;
    for (const auto& r : references) {
      for (const auto& [gram, count] : ngram_counts(r, n)) {
        auto& m = max_ref[gram];
        m = std::max(m, count);
      }
    }
    for (const auto& [gram, count] : cand) {
      c.totals[n - 1] += count;
      if (auto it = max_ref.find(gram); it != max_ref.end()) {
        c.matches[n - 1] += std::min(count, it->second);
      }
    }
  }
  return c;
}

double bleu_from_counts(const BleuCounts& counts, int n) {
  check_order(n);
  if (counts.candidate_length == 0) return 0.0;
  double log_sum = 0.0;
  int orders = 0;
  for (int i = 0; i < n; ++i) {
    if (counts.totals[i] == 0) continue;
    if (counts.matches[i] == 0) return 0.0;
    log_sum += std::log(static_cast<double>(counts.matches[i]) /
                        static_cast<double>(counts.totals[i]));
    ++orders;
  }
  if (orders == 0) return 0.0;
  const double c = static_cast<double>(counts.candidate_length);
  const double r = static_cast<double>(counts.reference_length);
  const double bp = c > r ? 1.0 : std::exp(1.0 - r / c);
  return bp * std::exp(log_sum / orders);
}

double bleu(std::string_view candidate, std::span<const std::string> references, int n,
            text::TokenMode mode) {
  check_order(n);
  const auto cand = text::tokenize(candidate, mode);
  const auto refs = tokenize_all(references, mode);
  return bleu_from_counts(bleu_counts(cand, refs), n);
}

double corpus_bleu(std::span<const GenerationPair> pairs, int n, text::TokenMode mode) {
  check_order(n);
  if (pairs.empty()) throw Error(ErrorCode::invalid_argument, "no generation pairs");
  BleuCounts total;
  for (const auto& p : pairs) {
    total += bleu_counts(text::tokenize(p.candidate, mode), tokenize_all(p.references, mode));
  }
  return bleu_from_counts(total, n);
}

double mean_sentence_bleu(std::span<const GenerationPair> pairs, int n, text::TokenMode mode) {
  if (pairs.empty()) throw Error(ErrorCode::invalid_argument, "no generation pairs");
  double sum = 0.0;
  for (const auto& p : pairs) sum += bleu(p.candidate, p.references, n, mode);
  return sum / static_cast<double>(pairs.size());
}

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double rouge_l(std::string_view candidate, std::string_view reference, text::TokenMode mode) {
  const auto c = text::tokenize(candidate, mode);
  const auto r = text::tokenize(reference, mode);
  if (c.empty() || r.empty()) return 0.0;
  const double lcs = static_cast<double>(lcs_length(c, r));
  if (lcs == 0.0) return 0.0;
  const double p = lcs / static_cast<double>(c.size());
  const double rec = lcs / static_cast<double>(r.size());
  return 2.0 * p * rec / (p + rec);
}

nlohmann::json to_json(const GenerationScores& s) {
  return {{"pairs", s.pairs},
          {"bleu1", s.bleu1},
          {"bleu2", s.bleu2},
          {"rouge_l", s.rouge_l},
          {"embed_sim", s.embed_sim ? nlohmann::json(*s.embed_sim) : nlohmann::json(nullptr)},
          {"bleu_averaging", s.corpus_level ? "corpus" : "sentence"}};
}

GenerationScores evaluate_generation(std::span<const GenerationPair> pairs,
                                     backends::Embedder* embedder, bool corpus_level,
                                     text::TokenMode mode) {
  if (pairs.empty()) throw Error(ErrorCode::invalid_argument, "no generation pairs");
  GenerationScores s;
  s.pairs = pairs.size();
  s.corpus_level = corpus_level;
  s.bleu1 = corpus_level ? corpus_bleu(pairs, 1, mode) : mean_sentence_bleu(pairs, 1, mode);
  s.bleu2 = corpus_level ? corpus_bleu(pairs, 2, mode) : mean_sentence_bleu(pairs, 2, mode);
  double rouge = 0.0;
  for (const auto& p : pairs) {
    double best = 0.0;
    for (const auto& r : p.references) best = std::max(best, rouge_l(p.candidate, r, mode));
    rouge += best;
  }
  s.rouge_l = rouge / static_cast<double>(pairs.size());
  if (embedder != nullptr) {
    double sim = 0.0;
    for (const auto& p : pairs) sim += backends::embed_sim(*embedder, p.candidate, p.references.front());
    s.embed_sim = sim / static_cast<double>(pairs.size());
  }
  return s;
}

GenerationPair pair_from_json(const nlohmann::json& j) {
  try {
    GenerationPair p;
    p.candidate = j.at("candidate").get<std::string>();
    if (j.contains("references")) {
      p.references = j.at("references").get<std::vector<std::string>>();
    } else {
      p.references.push_back(j.at("reference").get<std::string>());
    }
    if (p.references.empty()) throw Error(ErrorCode::schema_violation, "no references");
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::schema_violation, e.what());
  }
}

std::vector<GenerationPair> read_pairs(std::istream& in) {
  std::vector<GenerationPair> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    try {
      out.push_back(pair_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::schema_violation, where + e.what());
    } catch (const Error& e) {
      throw Error(ErrorCode::schema_violation, where + e.what());
    }
  }
  return out;
}

}  // namespace stampsy::eval
