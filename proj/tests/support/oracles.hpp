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
#include <cstdint>
#include <string>
#include <vector>

#include "kglink/term.hpp"

namespace kglink::testsupport {

// Plain recursive edit distance, exponential; only for short inputs.
std::size_t edit_distance_exhaustive(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b);

// Top-down memoized edit distance, written independently of the
// production two-row DP.
std::size_t edit_distance_memo(const std::vector<std::string>& a,
                               const std::vector<std::string>& b);

// Codepoint edit distance via the memoized token oracle.
std::size_t char_edit_distance(const std::string& a, const std::string& b);

// TF-IDF cosine recomputed from first principles over token multisets.
double cosine_oracle(const std::vector<std::string>& a,
                     const std::vector<std::string>& b,
                     const std::vector<std::vector<std::string>>& documents);

// Random statements exercising IRIs, language tags, datatypes, escapes and
// non-ASCII literal content.
std::vector<Triple> random_document(std::uint64_t seed, std::size_t triples);

}  // namespace kglink::testsupport
