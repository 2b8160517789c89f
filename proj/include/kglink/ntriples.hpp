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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kglink/term.hpp"

namespace kglink {

// Raised for malformed statement lines; carries the 1-based line number and
// the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string_view text, std::string_view reason)
      : std::runtime_error("line " + std::to_string(line) + ": " +
                           std::string(reason) + ": " + std::string(text)),
        line_(line),
        text_(text) {}

  std::size_t line() const { return line_; }
  const std::string& text() const { return text_; }

 private:
  std::size_t line_;
  std::string text_;
};

// Parses a line-oriented N-Triples document: one `<s> <p> <o> .` statement
// per line, absolute IRIs in angle brackets, literals in double quotes with
// optional @lang or ^^<iri> suffix, and \" \\ \n \t \r escapes. Blank lines
// and lines starting with '#' are skipped. Blank nodes are rejected.
// Statements are returned in file order; duplicates are kept.
std::vector<Triple> parse_ntriples(std::string_view text);

// Inverse of parse_ntriples; one statement line per triple.
std::string serialize_ntriples(const std::vector<Triple>& triples);

std::string serialize_term(const Term& term);

}  // namespace kglink
