// Copyright 2026 The kglink Authors
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

#include "kglink/stopwords.hpp"

#include "kglink/text.hpp"

namespace kglink {

namespace {

constexpr const char* kDefaultWords[] = {
    "a",    "an",   "and",  "are",   "as",    "at",   "be",   "been", "but",
    "by",   "did",  "do",   "does",  "for",   "from", "had",  "has",  "have",
    "he",   "her",  "his",  "i",     "if",    "in",   "into", "is",   "it",
    "its",  "my",   "no",   "not",   "of",    "on",   "or",   "our",  "she",
    "so",   "that", "the",  "their", "them",  "then", "there", "they",
    "this", "to",   "up",   "was",   "were",  "with",
};

}  // namespace

StopwordSet StopwordSet::defaults() {
  StopwordSet s;
  for (const char* w : kDefaultWords) s.add(w);
  return s;
}

StopwordSet StopwordSet::from_text(std::string_view text) {
  StopwordSet s;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (!line.empty() && line.front() == '#') continue;
    s.add(line);
    if (eol == text.size()) break;
  }
  return s;
}

void StopwordSet::add(std::string_view word) {
  for (const std::string& token : text::tokenize(word)) {
    words_.insert(token);
  }
}

}  // namespace kglink
