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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "stampsy/common/time.hpp"
#include "stampsy/corpus/session.hpp"
#include "stampsy/engine/config.hpp"
#include "stampsy/engine/events.hpp"
#include "stampsy/engine/prompt.hpp"
#include "stampsy/kstore/store.hpp"
#include "stampsy/skills/prediction.hpp"

namespace stampsy::engine {

enum class ProcessSignal { continue_session, warn_ending, end };
std::string_view to_string(ProcessSignal s);

// Clock readings taken as each pipeline stage finishes.
struct StageTimes {
  Timestamp received{};
  Timestamp classified{};
  Timestamp instructed{};
  Timestamp extracted{};
  Timestamp stamped{};
  Timestamp retrieved{};
  Timestamp assembled{};
  Timestamp generated{};
  Timestamp recorded{};
};

struct TurnResult {
  std::size_t exchange = 0;  // 1-based count of client/counselor exchanges
  corpus::Utterance response;
  skills::SkillPrediction prediction;
  // Skill the instruction was built from: the prediction, or the gold label
  // in gold-injection mode.
  corpus::GoalLabel goal = corpus::GoalLabel::of_skill(corpus::HelpingSkill::others);
  skills::GoalInstruction instruction;
  stsp::SpatioTemporalState state;
  stsp::Stamp stamp;
  kstore::RetrievalResult retrieval;
  AssembledPrompt prompt;
  std::optional<corpus::CaseRecording> recording;
  std::optional<std::string> recording_error;
  ProcessSignal signal = ProcessSignal::continue_session;
  std::optional<std::string> end_reason;
  StageTimes stages;
};

nlohmann::json to_json(const TurnResult& r);

// A live session and its event log. Engine calls replace it wholesale on
// success and leave it untouched on failure.
struct Conversation {
  corpus::DialogueSession session;
  EventLog log;
  std::size_t exchanges = 0;
};

// Orchestrates one session turn by turn:
//   client utterance -> skill -> instruction -> state -> stamp -> retrieval
//   -> prompt -> chat -> counselor utterance -> case recording -> process control
class Engine {
 public:
  // Throws config for an invalid configuration.
  Engine(StampsyConfig config, Backends backends, Clock clock = system_clock());

  const StampsyConfig& config() const { return config_; }
  const Backends& backends() const { return backends_; }

  // Opens a session whose first utterance is the opening script. Session ids
  // are drawn from the seeded id stream unless given.
  Conversation open_session(std::optional<std::string> session_id = std::nullopt,
                            std::optional<corpus::CaseConceptualization> ccm = std::nullopt);

  // Runs one exchange. `gold` supplies the counselor goal in gold-injection
  // mode and is ignored otherwise. Throws lifecycle on a closed session and
  // invalid_argument on blank text; chat backend failures propagate with the
  // conversation unchanged.
  TurnResult step(Conversation& conversation, std::string_view client_text,
                  std::optional<corpus::GoalLabel> gold = std::nullopt);

  // Appends the closing script and closes the session.
  corpus::Utterance close_session(Conversation& conversation);

  std::string next_session_id();

 private:
  std::string build_preamble(const Conversation& c, bool final_turn) const;
  skills::SkillPrediction classify(const std::vector<std::string>& context);

  StampsyConfig config_;
  Backends backends_;
  Clock clock_;
  std::uint64_t id_state_;
};

// Replays an event log into the conversation it describes.
Conversation rebuild_conversation(const EventLog& log);

// One record per generated counselor turn: {"session_id", "turn_index",
// "instruction", "input", "output", "skill", "reflection"}.
std::vector<nlohmann::json> export_finetune(const EventLog& log);

}  // namespace stampsy::engine
