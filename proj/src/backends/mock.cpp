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

#include "stampsy/backends/mock.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "stampsy/common/error.hpp"
#include "stampsy/common/hash.hpp"
#include "stampsy/common/kernels.hpp"
#include "stampsy/common/text.hpp"

namespace stampsy::backends {

namespace {

// "12. Some Title: question?" -> ("12", "Some Title")
bool numbered_question(const std::string& line, std::string& number, std::string& title) {
  std::size_t i = 0;
  while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
  if (i == 0 || i + 1 >= line.size() || line[i] != '.' || line[i + 1] != ' ') return false;
  const auto colon = line.find(':', i);
  if (colon == std::string::npos || line.back() != '?') return false;
  number = line.substr(0, i);
  title = text::trim(line.substr(i + 2, colon - i - 2));
  return !title.empty();
}

}  // namespace

std::string MockChatBackend::complete(std::span<const ChatMessage> messages) {
  check_budget(*this, messages);
  std::uint64_t h = fnv1a64(std::to_string(seed_));
  for (const auto& m : messages) h = fnv1a64(m.role + '\n' + m.content, h);
  const std::string tag = "[mock " + hex64(h).substr(0, 8) + "]";

  std::string last_line;
  std::ostringstream answers;
  bool any_question = false;
  if (!messages.empty()) {
    std::istringstream in(messages.back().content);
    std::string line;
    while (std::getline(in, line)) {
      line = text::trim(line);
      if (line.empty()) continue;
      last_line = line;
      std::string number, title;
      if (numbered_question(line, number, title)) {
        answers << number << ". " << title << ": " << tag << " reflection on "
                << text::ascii_lower(title) << ".\n";
        any_question = true;
      }
    }
  }
  if (any_question) return answers.str();
  return tag + " " + (last_line.empty() ? std::string("...") : last_line);
}

Vector MockEmbedder::embed_one(std::string_view input) const {
  Vector out(dimension_, 0.0);
  Vector direction(dimension_);
  const std::u32string cps = text::normalize_for_ngrams(input);
  std::map<std::u32string, int> counts;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t i = 0; i + n <= cps.size(); ++i) ++counts[cps.substr(i, n)];
  }
  if (counts.empty()) counts[U"\x01"] = 1;
  for (const auto& [gram, count] : counts) {
    std::uint64_t state = fnv1a64(text::encode_utf8(gram), seed_ ^ 0x9e3779b97f4a7c15ULL);
    for (double& d : direction) {
      const std::uint64_t r = splitmix64(state);
      d = static_cast<double>(r >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    }
    kernels::axpy(static_cast<double>(count), direction, out);
  }
  if (kernels::normalize(out) == 0.0) out[0] = 1.0;
  return out;
}

std::vector<Vector> MockEmbedder::embed(std::span<const std::string> texts) {
  if (texts.empty()) throw Error(ErrorCode::invalid_argument, "nothing to embed");
  std::vector<Vector> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(embed_one(t));
  return out;
}

void FaultyChatBackend::fail_next(std::initializer_list<ErrorCode> codes) {
  std::lock_guard lock(mu_);
  pending_.insert(pending_.end(), codes.begin(), codes.end());
}

std::string FaultyChatBackend::complete(std::span<const ChatMessage> messages) {
  ++calls_;
  if (always_) throw Error(ErrorCode::backend_unavailable, "injected failure");
  {
    std::lock_guard lock(mu_);
    if (!pending_.empty()) {
      const ErrorCode code = pending_.front();
      pending_.pop_front();
      throw Error(code, "injected failure");
    }
  }
  return inner_->complete(messages);
}

skills::Distribution FailingClassifier::predict(std::span<const std::string>) {
  throw Error(ErrorCode::backend_unavailable, "classifier 'failing' is unavailable");
}

}  // namespace stampsy::backends
