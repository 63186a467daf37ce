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

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "stampsy/engine/engine.hpp"

// The scripted ten-exchange session shared by the golden, replay and
// acceptance checks.
namespace stampsy::testing {

std::filesystem::path source_dir();
std::filesystem::path data_path(const std::string& relative);

inline constexpr const char* kScriptedSessionId = "golden-0001";

engine::StampsyConfig scripted_config();
corpus::CaseConceptualization scripted_ccm();
const std::vector<std::string>& scripted_turns();
Clock scripted_clock();
std::shared_ptr<engine::Engine> scripted_engine();

struct ScriptedRun {
  engine::Conversation conversation;
  std::vector<engine::TurnResult> turns;
};

ScriptedRun run_scripted_session(engine::Engine& engine);

std::string read_file(const std::filesystem::path& path);

}  // namespace stampsy::testing
