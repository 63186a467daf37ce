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


#include <doctest.h>

#include <chrono>
#include <cmath>
#include <random>
#include <vector>

#include "stampsy/common/error.hpp"
#include "stampsy/common/hash.hpp"
#include "stampsy/common/kernels.hpp"
#include "stampsy/common/text.hpp"
#include "stampsy/common/time.hpp"

using namespace stampsy;

TEST_CASE("tokenize modes") {
  using text::TokenMode;
  const std::string s = "我很好 today, thanks";
  CHECK(text::tokenize(s, TokenMode::mixed) ==
        std::vector<std::string>{"我", "很", "好", "today,", "thanks"});
  CHECK(text::count_tokens(s, TokenMode::characters) == 3 + 6 + 6);
  CHECK(text::count_tokens(s, TokenMode::whitespace) == 3);
  CHECK(text::count_tokens("", TokenMode::mixed) == 0);
  CHECK(text::count_tokens("   ", TokenMode::characters) == 0);
}

TEST_CASE("count_tokens agrees with tokenize") {
  std::mt19937 rng(3);
  const std::u32string alphabet = U"ab 我们，. \t雨";
  for (int i = 0; i < 300; ++i) {
    std::u32string s;
    for (int j = 0; j < static_cast<int>(rng() % 20); ++j) s += alphabet[rng() % alphabet.size()];
    const auto utf8 = text::encode_utf8(s);
    for (auto mode : {text::TokenMode::mixed, text::TokenMode::characters, text::TokenMode::whitespace}) {
      CHECK(text::count_tokens(utf8, mode) == text::tokenize(utf8, mode).size());
    }
  }
}

TEST_CASE("utf8 round trip and invalid input") {
  const std::string s = "晴天 ☀ ok";
  CHECK(text::encode_utf8(text::decode_utf8(s)) == s);
  const auto bad = text::decode_utf8(std::string("a\xff", 2));
  REQUIRE(bad.size() == 2);
  CHECK(bad[1] == 0xFFFD);
}

TEST_CASE("trim, lower, normalize") {
  CHECK(text::trim("  hi \n") == "hi");
  CHECK(text::trim("　你好　") == "你好");
  CHECK(text::ascii_lower("HeLLo 世界") == "hello 世界");
  CHECK(text::normalize_for_ngrams("Drink, Coffee!") == U"drinkcoffee");
  CHECK(text::token_mode_from_string("characters") == text::TokenMode::characters);
  CHECK_THROWS_AS(text::token_mode_from_string("bytes"), Error);
}

TEST_CASE("fnv1a and splitmix are stable") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  std::uint64_t state = 0;
  CHECK(splitmix64(state) == 0xe220a8397b1dcdafULL);
  CHECK(hex64(255).size() == 16);
}

TEST_CASE("iso8601 and stepping clock") {
  const auto t = parse_iso8601("2026-01-02T03:04:05.678Z");
  CHECK(format_iso8601(t) == "2026-01-02T03:04:05.678Z");
  auto clock = stepping_clock(t, std::chrono::milliseconds(500));
  CHECK(clock() == t);
  CHECK(format_iso8601(clock()) == "2026-01-02T03:04:06.178Z");
  CHECK_THROWS_AS(parse_iso8601("yesterday"), Error);
}

TEST_CASE("SIMD kernels match the scalar reference") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal;
  std::vector<const kernels::KernelTable*> tables = {&kernels::active_table()};
  if (auto* t = kernels::avx2_table()) tables.push_back(t);
  if (auto* t = kernels::neon_table()) tables.push_back(t);
  const auto& ref = kernels::scalar_table();
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 16u, 33u, 257u}) {
    std::vector<double> a(n), b(n);
    for (auto& v : a) v = normal(rng);
    for (auto& v : b) v = normal(rng);
    for (const auto* t : tables) {
      CAPTURE(kernels::to_string(t->isa));
      CHECK(t->dot(a.data(), b.data(), n) == doctest::Approx(ref.dot(a.data(), b.data(), n)).epsilon(1e-12));
      CHECK(t->squared_norm(a.data(), n) ==
            doctest::Approx(ref.squared_norm(a.data(), n)).epsilon(1e-12));
      auto y1 = b, y2 = b;
      t->axpy(0.75, a.data(), y1.data(), n);
      ref.axpy(0.75, a.data(), y2.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-14));
      t->scale(-2.0, y1.data(), n);
      ref.scale(-2.0, y2.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-14));
    }
  }
}

TEST_CASE("cosine and normalize") {
  std::vector<double> a = {3, 4}, b = {6, 8}, z = {0, 0};
  CHECK(kernels::cosine(a, b) == doctest::Approx(1.0));
  CHECK(kernels::cosine(a, z) == 0.0);
  CHECK(kernels::normalize(a) == doctest::Approx(5.0));
  CHECK(kernels::squared_norm(a) == doctest::Approx(1.0));
  std::vector<double> c = {1, 2, 3};
  CHECK_THROWS_AS(kernels::dot(a, c), Error);
}

TEST_CASE("error codes have names") {
  const Error e(ErrorCode::lifecycle, "closed");
  CHECK(e.code() == ErrorCode::lifecycle);
  CHECK(to_string(ErrorCode::budget_too_small) == "budget_too_small");
}
