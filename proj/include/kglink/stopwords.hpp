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

#pragma once

#include <string>
#include <string_view>
#include <unordered_set>

namespace kglink {

// Normalized words that never anchor a mention or a correction on their own.
class StopwordSet {
 public:
  StopwordSet() = default;

  // The built-in list of 50 common English function words, mirrored in
  // data/stopwords.txt.
  static StopwordSet defaults();

  // One word per line; blank lines and '#' comments ignored. Words are
  // normalized on the way in.
  static StopwordSet from_text(std::string_view text);

  void add(std::string_view word);
  bool contains(std::string_view normalized_word) const {
    return words_.count(std::string(normalized_word)) > 0;
  }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

}  // namespace kglink
