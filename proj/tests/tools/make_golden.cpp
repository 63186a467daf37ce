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


// Regenerates the frozen engine event log. Run by hand after an intentional
// change to the engine output, then review the diff.

#include <fstream>
#include <iostream>

#include "scripted_session.hpp"

int main(int argc, char** argv) {
  const auto out_path = argc > 1 ? std::filesystem::path(argv[1])
                                 : stampsy::testing::data_path("tests/golden/engine_10turn.jsonl");
  auto engine = stampsy::testing::scripted_engine();
  const auto run = stampsy::testing::run_scripted_session(*engine);
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "cannot write " << out_path << '\n';
    return 1;
  }
  run.conversation.log.write(out);
  std::cerr << "wrote " << run.conversation.log.size() << " events to " << out_path << '\n';
  return 0;
}
