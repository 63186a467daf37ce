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
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "stampsy/common/time.hpp"

namespace stampsy::engine {

enum class EventType { opened, client_turn, counselor_turn, recording, warned, closed };

std::string_view to_string(EventType t);
std::optional<EventType> event_type_from_string(std::string_view name);

struct SessionEvent {
  std::uint64_t sequence = 0;  // 1-based, gap-free per session
  EventType type = EventType::opened;
  Timestamp timestamp{};
  nlohmann::json payload = nlohmann::json::object();
};

// {"seq", "type", "ts", "payload"}
nlohmann::json to_json(const SessionEvent& e);
// Throws schema_violation.
SessionEvent event_from_json(const nlohmann::json& j);

// Append-only event sequence of one session. The first event must be opened,
// nothing may follow closed, and sequences are assigned here.
class EventLog {
 public:
  const SessionEvent& append(EventType type, nlohmann::json payload, Timestamp ts);
  // Appends an event read back from storage; its sequence must be next.
  void restore(SessionEvent event);

  const std::vector<SessionEvent>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  bool closed() const { return !events_.empty() && events_.back().type == EventType::closed; }

  // JSONL, one event per line.
  void write(std::ostream& out, std::size_t from = 0) const;
  std::string to_jsonl(std::size_t from = 0) const;
  static EventLog read(std::istream& in);

 private:
  void check_next(EventType type) const;
  std::vector<SessionEvent> events_;
};

// Session persistence. Implementations serialize their own access.
class EventStore {
 public:
  virtual ~EventStore() = default;
  virtual void append(const std::string& session_id, const SessionEvent& event) = 0;
  virtual std::optional<EventLog> load(const std::string& session_id) const = 0;
  virtual std::vector<std::string> sessions() const = 0;
};

// <dir>/<session_id>.jsonl, appended and flushed per event.
class FileEventStore final : public EventStore {
 public:
  explicit FileEventStore(std::filesystem::path dir);
  void append(const std::string& session_id, const SessionEvent& event) override;
  std::optional<EventLog> load(const std::string& session_id) const override;
  std::vector<std::string> sessions() const override;

 private:
  std::filesystem::path path_for(const std::string& session_id) const;
  std::filesystem::path dir_;
  mutable std::mutex mu_;
};

class MemoryEventStore final : public EventStore {
 public:
  void append(const std::string& session_id, const SessionEvent& event) override;
  std::optional<EventLog> load(const std::string& session_id) const override;
  std::vector<std::string> sessions() const override;

 private:
  mutable std::mutex mu_;
  std::map<std::string, std::vector<SessionEvent>> logs_;
};

}  // namespace stampsy::engine
