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


#include "stampsy/kstore/store.hpp"

#include <algorithm>
#include <mutex>

#include "stampsy/common/error.hpp"
#include "stampsy/skills/prediction.hpp"
#include "stampsy/stsp/stamp.hpp"

namespace stampsy::kstore {

KnowledgeStore::KnowledgeStore(const KnowledgeStore& other) {
  std::shared_lock lock(other.mu_);
  quads_ = other.quads_;
  by_slot_ = other.by_slot_;
  by_stamp_ = other.by_stamp_;
  unstamped_ = other.unstamped_;
}

KnowledgeStore& KnowledgeStore::operator=(const KnowledgeStore& other) {
  if (this == &other) return *this;
  KnowledgeStore copy(other);
  std::unique_lock lock(mu_);
  quads_ = std::move(copy.quads_);
  by_slot_ = std::move(copy.by_slot_);
  by_stamp_ = std::move(copy.by_stamp_);
  unstamped_ = std::move(copy.unstamped_);
  return *this;
}

std::size_t KnowledgeStore::ingest(std::span<const KnowledgeQuadruple> quads) {
  for (std::size_t i = 0; i < quads.size(); ++i) {
    try {
      quads[i].validate();
    } catch (const Error& e) {
      throw Error(e.code(), std::string(e.what()) + " (quadruple " + std::to_string(i) + ": " +
                                render(quads[i]) + ")");
    }
  }
  std::unique_lock lock(mu_);
  std::size_t added = 0;
  for (const auto& q : quads) {
    auto& slot_bucket = by_slot_[{q.domain, q.slot}];
    const bool dup = std::any_of(slot_bucket.begin(), slot_bucket.end(),
                                 [&](std::size_t i) { return quads_[i] == q; });
    if (dup) continue;
    const std::size_t index = quads_.size();
    quads_.push_back(q);
    slot_bucket.push_back(index);
    if (q.stamp) {
      by_stamp_[{static_cast<int>(q.stamp->field), q.stamp->value}].push_back(index);
    } else {
      unstamped_.push_back(index);
    }
    ++added;
  }
  return added;
}

std::size_t KnowledgeStore::size() const {
  std::shared_lock lock(mu_);
  return quads_.size();
}

std::vector<KnowledgeQuadruple> KnowledgeStore::quads() const {
  std::shared_lock lock(mu_);
  return quads_;
}

std::vector<KnowledgeQuadruple> KnowledgeStore::by_slot(Domain domain,
                                                         const std::string& slot) const {
  std::shared_lock lock(mu_);
  std::vector<KnowledgeQuadruple> out;
  if (auto it = by_slot_.find({domain, slot}); it != by_slot_.end()) {
    for (std::size_t i : it->second) out.push_back(quads_[i]);
  }
  return out;
}

std::vector<KnowledgeQuadruple> KnowledgeStore::by_stamp(stsp::StampKey stamp) const {
  std::shared_lock lock(mu_);
  std::vector<KnowledgeQuadruple> out;
  if (auto it = by_stamp_.find({static_cast<int>(stamp.field), stamp.value});
      it != by_stamp_.end()) {
    for (std::size_t i : it->second) out.push_back(quads_[i]);
  }
  return out;
}

std::vector<KnowledgeQuadruple> KnowledgeStore::unstamped() const {
  std::shared_lock lock(mu_);
  std::vector<KnowledgeQuadruple> out;
  for (std::size_t i : unstamped_) out.push_back(quads_[i]);
  return out;
}

bool stamp_compatible(const std::optional<stsp::StampKey>& stamp,
                      const stsp::SpatioTemporalState& state) {
  if (!stamp) return true;
  const auto value = state.get(stamp->field);
  return !value || *value == stamp->value;
}

nlohmann::json to_json(const RetrievalResult& r) {
  nlohmann::json quads = nlohmann::json::array();
  for (const auto& sq : r.quadruples) {
    nlohmann::json j = to_json(sq.quad);
    j["score"] = sq.score;
    quads.push_back(std::move(j));
  }
  nlohmann::json pinned = nlohmann::json::array();
  for (const auto& q : r.pinned) pinned.push_back(to_json(q));
  return {{"gated", r.gated}, {"quadruples", quads}, {"pinned", pinned}};
}

RetrievalResult retrieve(const KnowledgeStore& store, const RetrievalQuery& query,
                         corpus::HelpingSkill skill, const RetrievalOptions& options) {
  if (options.k == 0) throw Error(ErrorCode::invalid_argument, "k must be at least 1");
  RetrievalResult result;

  std::vector<KnowledgeQuadruple> candidates;
  if (options.overlay) candidates = options.overlay->quads();
  for (auto& q : store.quads()) {
    if (std::find(candidates.begin(), candidates.end(), q) == candidates.end()) {
      candidates.push_back(std::move(q));
    }
  }

  if (options.always_inject_persona) {
    for (const auto& q : candidates) {
      if (q.domain == Domain::personal_information) result.pinned.push_back(q);
    }
  }

  result.gated = skills::needs_knowledge(skill);
  if (!result.gated) return result;

  std::vector<KnowledgeQuadruple> survivors;
  for (auto& q : candidates) {
    if (options.always_inject_persona && q.domain == Domain::personal_information) continue;
    if (stamp_compatible(q.stamp, query.state)) survivors.push_back(std::move(q));
  }
  std::vector<std::string> docs;
  docs.reserve(survivors.size());
  for (const auto& q : survivors) docs.push_back(q.search_text());

  static const BigramScorer kDefaultScorer;
  const Scorer& scorer = options.scorer ? *options.scorer : kDefaultScorer;
  const std::vector<double> scores = scorer.score(query.text, docs);

  for (std::size_t i = 0; i < survivors.size(); ++i) {
    if (scores[i] > 0.0) result.quadruples.push_back({std::move(survivors[i]), scores[i]});
  }
  std::stable_sort(result.quadruples.begin(), result.quadruples.end(),
                   [](const ScoredQuad& a, const ScoredQuad& b) { return a.score > b.score; });
  if (result.quadruples.size() > options.k) result.quadruples.resize(options.k);
  return result;
}

std::vector<KnowledgeQuadruple> session_overlay(
    const std::optional<corpus::CaseConceptualization>& ccm,
    const std::optional<stsp::SpatioTemporalState>& state) {
  std::vector<KnowledgeQuadruple> out;
  if (ccm) {
    for (std::size_t i = 0; i < corpus::kCcmSlotCount; ++i) {
      const auto& v = ccm->slots[i];
      if (!v || v->empty()) continue;
      out.push_back({Domain::personal_information,
                     std::string(corpus::to_string(static_cast<corpus::CcmSlot>(i))), *v,
                     std::nullopt});
    }
  }
  if (state) {
    for (stsp::Field f : stsp::kFields) {
      if (auto key = state->key(f)) {
        out.push_back({Domain::spatial_temporal_information, std::string(stsp::to_string(f)),
                       std::string(stsp::impact_sentence(*key)), *key});
      }
    }
  }
  return out;
}

}  // namespace stampsy::kstore
