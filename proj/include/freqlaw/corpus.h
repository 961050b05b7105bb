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

// Corpus ingestion: UTF-8 text to species counts.

#ifndef FREQLAW_CORPUS_H_
#define FREQLAW_CORPUS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "freqlaw/histogram.h"

namespace freqlaw {

enum class Tokenizer {
  // Runs of non-whitespace (ASCII space, tab, newline, CR, VT, FF).
  kWhitespace,
  // Runs of letters, digits and underscore. Non-ASCII code points count as
  // letters unless they fall in the common punctuation and symbol blocks.
  kUnicodeWord,
};

struct CorpusConfig {
  Tokenizer tokenizer = Tokenizer::kWhitespace;
  // Simple case folding for ASCII, Latin-1, Latin Extended-A, Greek and
  // basic Cyrillic.
  bool lowercase = false;
  // Species seen fewer times are dropped after counting.
  std::uint64_t min_count = 0;
};

// Decodes UTF-8, throwing DataError on malformed, overlong or surrogate
// sequences.
std::vector<char32_t> DecodeUtf8(std::string_view bytes);
void AppendUtf8(char32_t cp, std::string& out);

char32_t SimpleLowercase(char32_t cp);

std::vector<std::string> Tokenize(std::string_view bytes,
                                  const CorpusConfig& config);

// Counts tokens in first-appearance order.
SpeciesCounts TokenizeAndCount(std::string_view bytes,
                               const CorpusConfig& config);

}  // namespace freqlaw

#endif  // FREQLAW_CORPUS_H_
