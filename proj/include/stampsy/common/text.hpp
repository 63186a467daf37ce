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
#include <string>
#include <string_view>
#include <vector>

// UTF-8 helpers and the tokenizer shared by corpus statistics, prompt
// budgeting and the generation metrics.
namespace stampsy::text {

// mixed:      every CJK code point is a token; other runs split on whitespace.
// characters: every non-whitespace code point is a token.
// whitespace: plain whitespace split.
enum class TokenMode { mixed, characters, whitespace };

std::string_view to_string(TokenMode mode);
TokenMode token_mode_from_string(std::string_view name);

// Invalid sequences decode to U+FFFD; decoding never throws.
std::u32string decode_utf8(std::string_view input);
std::string encode_utf8(std::u32string_view input);
void append_utf8(std::string& out, char32_t cp);

bool is_cjk(char32_t cp);
bool is_space(char32_t cp);
// ASCII punctuation plus the CJK and fullwidth punctuation blocks.
bool is_punct(char32_t cp);

std::vector<std::string> tokenize(std::string_view input,
                                  TokenMode mode = TokenMode::mixed);
std::size_t count_tokens(std::string_view input,
                         TokenMode mode = TokenMode::mixed);

std::string trim(std::string_view input);
std::string ascii_lower(std::string_view input);
bool contains(std::string_view haystack, std::string_view needle);

// Lowercased code points with whitespace and punctuation removed; the unit
// the character n-gram scorers work on.
std::u32string normalize_for_ngrams(std::string_view input);

}  // namespace stampsy::text
