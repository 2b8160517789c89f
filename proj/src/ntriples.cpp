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

#include "kglink/ntriples.hpp"

#include <cctype>

namespace kglink {

namespace {

struct LineParser {
  std::string_view line;
  std::size_t pos = 0;
  std::size_t line_no;

  [[noreturn]] void fail(std::string_view reason) const {
    throw ParseError(line_no, line, reason);
  }

  bool eof() const { return pos >= line.size(); }
  char peek() const { return line[pos]; }

  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos;
  }

  Term parse_iri() {
    if (eof() || peek() != '<') {
      if (!eof() && peek() == '_') fail("blank nodes are not supported");
      fail("expected IRI");
    }
    ++pos;
    std::size_t start = pos;
    while (!eof() && peek() != '>') ++pos;
    if (eof()) fail("unterminated IRI");
    std::string value(line.substr(start, pos - start));
    ++pos;
    if (value.empty()) fail("empty IRI");
    if (value.find(':') == std::string::npos) fail("IRI is not absolute");
    return Term::iri(std::move(value));
  }

  std::string parse_quoted() {
    ++pos;  // opening quote
    std::string out;
    while (true) {
      if (eof()) fail("unterminated literal");
      char c = peek();
      ++pos;
      if (c == '"') return out;
      if (c != '\\') {
        out.push_back(c);
        continue;
      }
      if (eof()) fail("dangling escape");
      char esc = peek();
      ++pos;
      switch (esc) {
        case '"': out.push_back('"'); break;
        case '\\': out.push_back('\\'); break;
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        case 'r': out.push_back('\r'); break;
        default: fail("unsupported escape sequence");
      }
    }
  }

  Term parse_object() {
    if (eof()) fail("expected object term");
    if (peek() == '<') return parse_iri();
    if (peek() == '_') fail("blank nodes are not supported");
    if (peek() != '"') fail("expected object term");
    std::string value = parse_quoted();
    std::string lang;
    std::string datatype;
    if (!eof() && peek() == '@') {
      ++pos;
      std::size_t start = pos;
      while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                        peek() == '-')) {
        ++pos;
      }
      lang = std::string(line.substr(start, pos - start));
      if (lang.empty()) fail("empty language tag");
    } else if (pos + 1 < line.size() && peek() == '^' && line[pos + 1] == '^') {
      pos += 2;
      Term dt = parse_iri();
      datatype = dt.value;
    }
    return Term::literal(std::move(value), std::move(lang),
                         std::move(datatype));
  }

  Triple parse_statement() {
    skip_ws();
    Term subject = parse_iri();
    skip_ws();
    Term predicate = parse_iri();
    skip_ws();
    Term object = parse_object();
    skip_ws();
    if (eof() || peek() != '.') fail("statement must end with '.'");
    ++pos;
    skip_ws();
    if (!eof()) fail("trailing content after '.'");
    return Triple{std::move(subject.value), std::move(predicate.value),
                  std::move(object)};
  }
};

bool is_blank_or_comment(std::string_view line) {
  for (char c : line) {
    if (c == ' ' || c == '\t') continue;
    return c == '#';
  }
  return true;
}

void append_escaped(std::string& out, std::string_view s) {
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
}

}  // namespace

std::vector<Triple> parse_ntriples(std::string_view text) {
  std::vector<Triple> triples;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    if (pos == text.size() && line_no > 0) break;
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = eol + 1;
    if (is_blank_or_comment(line)) continue;
    LineParser parser{line, 0, line_no};
    triples.push_back(parser.parse_statement());
  }
  return triples;
}

std::string serialize_term(const Term& term) {
  std::string out;
  if (term.is_iri()) {
    out.push_back('<');
    out += term.value;
    out.push_back('>');
    return out;
  }
  out.push_back('"');
  append_escaped(out, term.value);
  out.push_back('"');
  if (!term.lang.empty()) {
    out.push_back('@');
    out += term.lang;
  } else if (!term.datatype.empty()) {
    out += "^^<";
    out += term.datatype;
    out.push_back('>');
  }
  return out;
}

std::string serialize_ntriples(const std::vector<Triple>& triples) {
  std::string out;
  for (const Triple& t : triples) {
    out += serialize_term(Term::iri(t.subject));
    out.push_back(' ');
    out += serialize_term(Term::iri(t.predicate));
    out.push_back(' ');
    out += serialize_term(t.object);
    out += " .\n";
  }
  return out;
}

}  // namespace kglink
