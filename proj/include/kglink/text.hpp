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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kglink::text {

// Decodes UTF-8 to codepoints. Invalid byte sequences become U+FFFD.
std::vector<char32_t> utf8_decode(std::string_view s);

std::string utf8_encode(const std::vector<char32_t>& cps);

// Canonical form used for all surface matching: combining marks composed
// (Latin-1 Supplement / Latin Extended-A coverage), lowercased, punctuation
// mapped to spaces, whitespace collapsed, trimmed. Idempotent. Codepoints
// outside the covered ranges pass through unchanged.
std::string normalize(std::string_view s);

// normalize() then split on single spaces. Empty input gives no tokens.
std::vector<std::string> tokenize(std::string_view s);

// Codepoint-level edit distance with unit costs.
std::size_t levenshtein(std::string_view a, std::string_view b);

// Token-level edit distance with unit costs.
std::size_t levenshtein_tokens(const std::vector<std::string>& a,
                               const std::vector<std::string>& b);

// 1 - levenshtein(a, b) / max(|a|, |b|), lengths in codepoints.
// Two empty strings are identical (1.0).
double similarity(std::string_view a, std::string_view b);

// Soundex key of a single token: uppercased first letter plus three digits
// (b f p v -> 1, c g j k q s x z -> 2, d t -> 3, l -> 4, m n -> 5, r -> 6).
// Vowels and h/w/y are skipped outright, adjacent duplicate codes collapse
// (the first letter's own code seeds the collapse), and the digit string is
// zero-padded or truncated to three. Non-ASCII characters carry no code.
// Returns "" for tokens without any ASCII letter; throws on empty input.
std::string soundex(std::string_view token);

// Substring after the last '#' or '/' of an IRI.
std::string local_name(std::string_view iri);

}  // namespace kglink::text
