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


#include "stampsy/engine/events.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "stampsy/common/error.hpp"
#include "stampsy/common/text.hpp"

namespace stampsy::engine {

namespace {

constexpr std::array<std::string_view, 6> kEventNames = {
    "opened", "client_turn", "counselor_turn", "recording", "warned", "closed"};

bool valid_session_id(const std::string& id) {
  if (id.empty() || id.size() > 128) return false;
  for (char c : id) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(EventType t) { return kEventNames[static_cast<std::size_t>(t)]; }

std::optional<EventType> event_type_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kEventNames.size(); ++i) {
    if (kEventNames[i] == name) return static_cast<EventType>(i);
  }
  return std::nullopt;
}

nlohmann::json to_json(const SessionEvent& e) {
  return {{"seq", e.sequence},
          {"type", to_string(e.type)},
          {"ts", format_iso8601(e.timestamp)},
          {"payload", e.payload}};
}

SessionEvent event_from_json(const nlohmann::json& j) {
  try {
    SessionEvent e;
    e.sequence = j.at("seq").get<std::uint64_t>();
    const auto type = event_type_from_string(j.at("type").get<std::string>());
    if (!type) throw Error(ErrorCode::schema_violation, "unknown event type");
    e.type = *type;
    e.timestamp = parse_iso8601(j.at("ts").get<std::string>());
    e.payload = j.at("payload");
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::schema_violation, std::string("malformed event: ") + ex.what());
  } catch (const Error& ex) {
    throw Error(ErrorCode::schema_violation, std::string("malformed event: ") + ex.what());
  }
}

void EventLog::check_next(EventType type) const {
  if (events_.empty() && type != EventType::opened) {
    throw Error(ErrorCode::lifecycle, "an event log must start with opened");
  }
  if (!events_.empty() && type == EventType::opened) {
    throw Error(ErrorCode::lifecycle, "opened may only be the first event");
  }
  if (closed()) throw Error(ErrorCode::lifecycle, "no events may follow closed");
}

const SessionEvent& EventLog::append(EventType type, nlohmann::json payload, Timestamp ts) {
  check_next(type);
  events_.push_back({events_.size() + 1, type, ts, std::move(payload)});
  return events_.back();
}

void EventLog::restore(SessionEvent event) {
  check_next(event.type);
  if (event.sequence != events_.size() + 1) {
    throw Error(ErrorCode::schema_violation, "event sequence " + std::to_string(event.sequence) +
                                                 " out of order, expected " +
                                                 std::to_string(events_.size() + 1));
  }
  events_.push_back(std::move(event));
}

void EventLog::write(std::ostream& out, std::size_t from) const {
  for (std::size_t i = from; i < events_.size(); ++i) out << to_json(events_[i]).dump() << '\n';
}

std::string EventLog::to_jsonl(std::size_t from) const {
  std::ostringstream out;
  write(out, from);
  return out.str();
}

EventLog EventLog::read(std::istream& in) {
  EventLog log;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    try {
      log.restore(event_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::parse_error&) {
      throw Error(ErrorCode::schema_violation, "line " + std::to_string(line_no) + ": invalid JSON");
    } catch (const Error& e) {
      throw Error(ErrorCode::schema_violation, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return log;
}

FileEventStore::FileEventStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path FileEventStore::path_for(const std::string& session_id) const {
  if (!valid_session_id(session_id)) {
    throw Error(ErrorCode::invalid_argument, "invalid session id '" + session_id + "'");
  }
  return dir_ / (session_id + ".jsonl");
}

void FileEventStore::append(const std::string& session_id, const SessionEvent& event) {
  const auto path = path_for(session_id);
  std::lock_guard lock(mu_);
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error(ErrorCode::service_error, "cannot append to " + path.string());
  out << to_json(event).dump() << '\n';
  out.flush();
  if (!out) throw Error(ErrorCode::service_error, "write to " + path.string() + " failed");
}

std::optional<EventLog> FileEventStore::load(const std::string& session_id) const {
  if (!valid_session_id(session_id)) return std::nullopt;
  const auto path = path_for(session_id);
  std::lock_guard lock(mu_);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  return EventLog::read(in);
}

std::vector<std::string> FileEventStore::sessions() const {
  std::lock_guard lock(mu_);
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
    if (entry.path().extension() == ".jsonl") out.push_back(entry.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void MemoryEventStore::append(const std::string& session_id, const SessionEvent& event) {
  std::lock_guard lock(mu_);
  auto& log = logs_[session_id];
  if (event.sequence != log.size() + 1) {
    throw Error(ErrorCode::conflict, "event sequence out of order for " + session_id);
  }
  log.push_back(event);
}

std::optional<EventLog> MemoryEventStore::load(const std::string& session_id) const {
  std::lock_guard lock(mu_);
  auto it = logs_.find(session_id);
  if (it == logs_.end()) return std::nullopt;
  EventLog log;
  for (const auto& e : it->second) log.restore(e);
  return log;
}

std::vector<std::string> MemoryEventStore::sessions() const {
  std::lock_guard lock(mu_);
  std::vector<std::string> out;
  for (const auto& [id, _] : logs_) out.push_back(id);
  return out;
}

}  // namespace stampsy::engine
