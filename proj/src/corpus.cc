// Copyright 2026 The Freqlaw Authors.
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

#include "freqlaw/corpus.h"

#include <string>

#include "freqlaw/errors.h"

namespace freqlaw {
namespace {

[[noreturn]] void BadUtf8(std::size_t offset) {
  throw DataError("invalid UTF-8 at byte offset " + std::to_string(offset));
}

bool IsAsciiSpace(char32_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

bool InRange(char32_t c, char32_t lo, char32_t hi) {
  return c >= lo && c <= hi;
}

bool IsWordChar(char32_t c) {
  if (c < 0x80) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
           (c >= 'A' && c <= 'Z') || c == '_';
  }
  if (InRange(c, 0x80, 0xBF)) return c == 0xAA || c == 0xB5 || c == 0xBA;
  if (c == 0xD7 || c == 0xF7 || c == 0xFEFF) return false;
  if (InRange(c, 0x2000, 0x206F) || InRange(c, 0x20A0, 0x20CF) ||
      InRange(c, 0x2190, 0x2BFF) || InRange(c, 0x2E00, 0x2E7F) ||
      InRange(c, 0x3000, 0x303F) || InRange(c, 0xFE30, 0xFE4F) ||
      InRange(c, 0xFF00, 0xFF0F) || InRange(c, 0xFF1A, 0xFF20) ||
      InRange(c, 0xFF3B, 0xFF40) || InRange(c, 0xFF5B, 0xFF65) ||
      InRange(c, 0x1F000, 0x1FAFF)) {
    return false;
  }
  return true;
}

}  // namespace

std::vector<char32_t> DecodeUtf8(std::string_view bytes) {
  std::vector<char32_t> out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  while (i < bytes.size()) {
    const auto b0 = static_cast<unsigned char>(bytes[i]);
    int len;
    char32_t cp;
    char32_t min;
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2, cp = b0 & 0x1F, min = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3, cp = b0 & 0x0F, min = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4, cp = b0 & 0x07, min = 0x10000;
    } else {
      BadUtf8(i);
    }
    if (i + len > bytes.size()) BadUtf8(i);
    for (int k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(bytes[i + k]);
      if ((b & 0xC0) != 0x80) BadUtf8(i);
      cp = (cp << 6) | (b & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || InRange(cp, 0xD800, 0xDFFF)) BadUtf8(i);
    out.push_back(cp);
    i += len;
  }
  return out;
}

void AppendUtf8(char32_t cp, std::string& out) {
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

char32_t SimpleLowercase(char32_t c) {
  if (InRange(c, 'A', 'Z')) return c + 0x20;
  if (c < 0x80) return c;
  if (InRange(c, 0xC0, 0xDE) && c != 0xD7) return c + 0x20;
  if (InRange(c, 0x100, 0x137) || InRange(c, 0x14A, 0x177)) return c | 1;
  if (InRange(c, 0x139, 0x148) || InRange(c, 0x179, 0x17E)) {
    return (c & 1) ? c + 1 : c;
  }
  if (c == 0x178) return 0xFF;
  if (InRange(c, 0x391, 0x3A9) && c != 0x3A2) return c + 0x20;
  if (InRange(c, 0x410, 0x42F)) return c + 0x20;
  if (InRange(c, 0x400, 0x40F)) return c + 0x50;
  return c;
}

std::vector<std::string> Tokenize(std::string_view bytes,
                                  const CorpusConfig& config) {
  const std::vector<char32_t> cps = DecodeUtf8(bytes);
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  for (char32_t c : cps) {
    const bool in_token = config.tokenizer == Tokenizer::kWhitespace
                              ? !IsAsciiSpace(c)
                              : IsWordChar(c);
    if (!in_token) {
      flush();
      continue;
    }
    AppendUtf8(config.lowercase ? SimpleLowercase(c) : c, current);
  }
  flush();
  return tokens;
}

SpeciesCounts TokenizeAndCount(std::string_view bytes,
                               const CorpusConfig& config) {
  SpeciesCounts counts;
  for (const std::string& t : Tokenize(bytes, config)) counts.Add(t);
  return config.min_count > 1 ? counts.Filtered(config.min_count) : counts;
}

}  // namespace freqlaw
