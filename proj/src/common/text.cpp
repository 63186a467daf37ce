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

#include "stampsy/common/text.hpp"

#include <algorithm>

#include "stampsy/common/error.hpp"

namespace stampsy::text {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

bool in_range(char32_t cp, char32_t lo, char32_t hi) { return cp >= lo && cp <= hi; }

}  // namespace

std::string_view to_string(TokenMode mode) {
  switch (mode) {
    case TokenMode::mixed: return "mixed";
    case TokenMode::characters: return "characters";
    case TokenMode::whitespace: return "whitespace";
  }
  return "mixed";
}

TokenMode token_mode_from_string(std::string_view name) {
  if (name == "mixed") return TokenMode::mixed;
  if (name == "characters") return TokenMode::characters;
  if (name == "whitespace") return TokenMode::whitespace;
  throw Error(ErrorCode::invalid_argument, "unknown token mode '" + std::string(name) + "'");
}

std::u32string decode_utf8(std::string_view input) {
  std::u32string out;
  out.reserve(input.size());
  std::size_t i = 0;
  const std::size_t n = input.size();
  while (i < n) {
    const auto b0 = static_cast<unsigned char>(input[i]);
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    int extra = 0;
    char32_t cp = 0;
    char32_t min = 0;
    if ((b0 & 0xE0) == 0xC0) {
      extra = 1;
      cp = b0 & 0x1F;
      min = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
      extra = 2;
      cp = b0 & 0x0F;
      min = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
      extra = 3;
      cp = b0 & 0x07;
      min = 0x10000;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    // A truncated sequence at the end of input is invalid.
    bool ok = i + static_cast<std::size_t>(extra) < n;
    if (ok) {
      for (int k = 1; k <= extra; ++k) {
        const auto b = static_cast<unsigned char>(input[i + k]);
        if ((b & 0xC0) != 0x80) {
          ok = false;
          break;
        }
        cp = (cp << 6) | (b & 0x3F);
      }
    }
    if (!ok || cp < min || cp > 0x10FFFF || in_range(cp, 0xD800, 0xDFFF)) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += static_cast<std::size_t>(extra) + 1;
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode_utf8(std::u32string_view input) {
  std::string out;
  out.reserve(input.size());
  for (char32_t cp : input) append_utf8(out, cp);
  return out;
}

bool is_cjk(char32_t cp) {
  return in_range(cp, 0x4E00, 0x9FFF)      // unified ideographs
         || in_range(cp, 0x3400, 0x4DBF)   // extension A
         || in_range(cp, 0x20000, 0x2A6DF) // extension B
         || in_range(cp, 0xF900, 0xFAFF)   // compatibility ideographs
         || in_range(cp, 0x3000, 0x303F)   // CJK symbols and punctuation
         || in_range(cp, 0x3040, 0x30FF)   // kana
         || in_range(cp, 0xAC00, 0xD7AF)   // hangul syllables
         || in_range(cp, 0xFF00, 0xFFEF);  // halfwidth and fullwidth forms
}

bool is_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\f' ||
         cp == U'\v' || cp == 0x00A0 || cp == 0x3000 || in_range(cp, 0x2000, 0x200B);
}

bool is_punct(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  }
  return in_range(cp, 0x3001, 0x303F) || in_range(cp, 0xFF01, 0xFF0F) ||
         in_range(cp, 0xFF1A, 0xFF20) || in_range(cp, 0xFF3B, 0xFF40) ||
         in_range(cp, 0xFF5B, 0xFF65) || in_range(cp, 0x2010, 0x2027) ||
         in_range(cp, 0x2030, 0x205E);
}

std::vector<std::string> tokenize(std::string_view input, TokenMode mode) {
  std::vector<std::string> tokens;
  const std::u32string cps = decode_utf8(input);
  std::string run;
  auto flush = [&] {
    if (!run.empty()) {
      tokens.push_back(std::move(run));
      run.clear();
    }
  };
  for (char32_t cp : cps) {
    if (is_space(cp)) {
      flush();
      continue;
    }
    const bool single = mode == TokenMode::characters ||
                        (mode == TokenMode::mixed && is_cjk(cp));
    if (single) {
      flush();
      std::string tok;
      append_utf8(tok, cp);
      tokens.push_back(std::move(tok));
    } else {
      append_utf8(run, cp);
    }
  }
  flush();
  return tokens;
}

std::size_t count_tokens(std::string_view input, TokenMode mode) {
  std::size_t count = 0;
  bool in_run = false;
  for (char32_t cp : decode_utf8(input)) {
    if (is_space(cp)) {
      in_run = false;
      continue;
    }
    const bool single = mode == TokenMode::characters ||
                        (mode == TokenMode::mixed && is_cjk(cp));
    if (single) {
      ++count;
      in_run = false;
    } else if (!in_run) {
      ++count;
      in_run = true;
    }
  }
  return count;
}

std::string trim(std::string_view input) {
  const std::u32string cps = decode_utf8(input);
  std::size_t b = 0;
  std::size_t e = cps.size();
  while (b < e && is_space(cps[b])) ++b;
  while (e > b && is_space(cps[e - 1])) --e;
  return encode_utf8(std::u32string_view(cps).substr(b, e - b));
}

std::string ascii_lower(std::string_view input) {
  std::string out(input);
  std::transform(out.begin(), out.end(), out.begin(), [](char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
  });
  return out;
}

bool contains(std::string_view haystack, std::string_view needle) {
  return haystack.find(needle) != std::string_view::npos;
}

std::u32string normalize_for_ngrams(std::string_view input) {
  std::u32string out;
  for (char32_t cp : decode_utf8(input)) {
    if (is_space(cp) || is_punct(cp)) continue;
    if (cp >= U'A' && cp <= U'Z') cp = cp - U'A' + U'a';
    out.push_back(cp);
  }
  return out;
}

}  // namespace stampsy::text
