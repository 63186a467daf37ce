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

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stampsy/corpus/session.hpp"
#include "stampsy/kstore/quadruple.hpp"
#include "stampsy/kstore/scorer.hpp"
#include "stampsy/stsp/state.hpp"

namespace stampsy::kstore {

// Quadruple store indexed by (domain, slot) and by stamp. Reads may run
// concurrently; ingest takes the lock exclusively.
class KnowledgeStore {
 public:
  KnowledgeStore() = default;
  KnowledgeStore(const KnowledgeStore& other);
  KnowledgeStore& operator=(const KnowledgeStore& other);

  // Validates every quadruple before adding any. Identical 4-tuples are
  // stored once. Returns the number of new quadruples.
  std::size_t ingest(std::span<const KnowledgeQuadruple> quads);

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  // Snapshot in insertion order.
  std::vector<KnowledgeQuadruple> quads() const;
  std::vector<KnowledgeQuadruple> by_slot(Domain domain, const std::string& slot) const;
  std::vector<KnowledgeQuadruple> by_stamp(stsp::StampKey stamp) const;
  std::vector<KnowledgeQuadruple> unstamped() const;

 private:
  mutable std::shared_mutex mu_;
  std::vector<KnowledgeQuadruple> quads_;
  std::map<std::pair<Domain, std::string>, std::vector<std::size_t>> by_slot_;
  std::map<std::pair<int, int>, std::vector<std::size_t>> by_stamp_;
  std::vector<std::size_t> unstamped_;
};

// A quadruple without a stamp fits every state, and a state field left null
// fits every stamp on that field. Otherwise the stamp must equal the state's
// value on the stamp's own field.
bool stamp_compatible(const std::optional<stsp::StampKey>& stamp,
                      const stsp::SpatioTemporalState& state);

struct ScoredQuad {
  KnowledgeQuadruple quad;
  double score = 0.0;
};

struct RetrievalResult {
  // Ranked by score, highest first; ties keep overlay-then-insertion order.
  std::vector<ScoredQuad> quadruples;
  // Whether retrieval ran. False leaves `quadruples` empty.
  bool gated = false;
  // Persona quadruples injected regardless of the gate (always_inject_persona).
  std::vector<KnowledgeQuadruple> pinned;
};

nlohmann::json to_json(const RetrievalResult& r);

struct RetrievalQuery {
  std::string text;
  stsp::SpatioTemporalState state;
};

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

struct RetrievalOptions {
  std::size_t k = 5;
  // Defaults to the bigram scorer.
  const Scorer* scorer = nullptr;
  // Session-specific quadruples, searched before the shared store.
  const KnowledgeStore* overlay = nullptr;
  bool always_inject_persona = false;
};

// Runs only for skills that need knowledge. Survivors of the stamp filter
// are scored against "slot value"; zero scores are dropped and the top k kept.
// Throws invalid_argument when k is 0.
RetrievalResult retrieve(const KnowledgeStore& store, const RetrievalQuery& query,
                         corpus::HelpingSkill skill, const RetrievalOptions& options = {});

// Per-session overlay: one personal_information quadruple per filled CCM slot
// and one stamped spatial_temporal_information quadruple per known state field.
std::vector<KnowledgeQuadruple> session_overlay(
    const std::optional<corpus::CaseConceptualization>& ccm,
    const std::optional<stsp::SpatioTemporalState>& state);

}  // namespace stampsy::kstore
