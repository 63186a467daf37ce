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

#include <chrono>
#include <functional>
#include <string>
#include <string_view>

namespace stampsy {

using Timestamp = std::chrono::system_clock::time_point;
using Clock = std::function<Timestamp()>;

Clock system_clock();
// Starts at `start` and advances by `step` on every call. Used wherever
// output has to be byte-reproducible (golden logs, replay tests).
Clock stepping_clock(Timestamp start, std::chrono::milliseconds step);

// UTC, millisecond precision: 2026-01-02T03:04:05.678Z
std::string format_iso8601(Timestamp t);
Timestamp parse_iso8601(std::string_view text);

}  // namespace stampsy
