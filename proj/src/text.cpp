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

#include "kglink/text.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace kglink::text {

namespace {

#include "latin_tables.inc"

constexpr char32_t kReplacement = 0xFFFD;

char32_t compose(char32_t base, char32_t mark) {
  for (const auto& e : kLatinCompose) {
    if (e.base == base && e.mark == mark) return e.composed;
  }
  return 0;
}

char32_t to_lower_cp(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0x00C0 && cp < 0x0180) {
    for (const auto& e : kLatinLower) {
      if (e.upper == cp) return e.lower;
    }
  }
  return cp;
}

bool is_combining_mark(char32_t cp) { return cp >= 0x0300 && cp <= 0x036F; }

// Letters and digits survive normalization; whitespace, controls and
// punctuation in the covered ranges become spaces. Codepoints >= U+0180
// that are not in the general punctuation block are kept as-is.
bool keeps(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') ||
           (cp >= 'A' && cp <= 'Z');
  }
  if (cp < 0x00C0) return cp == 0x00AA || cp == 0x00BA;  // ordinal indicators
  if (cp < 0x0180) return cp != 0x00D7 && cp != 0x00F7;  // multiply, divide
  if (cp >= 0x2000 && cp <= 0x206F) return false;        // general punctuation
  if (cp == 0x00A0) return false;
  return true;
}

}  // namespace

std::vector<char32_t> utf8_decode(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (c < 0x80) {
      cp = c;
      len = 1;
    } else if ((c & 0xE0) == 0xC0) {
      cp = c & 0x1F;
      len = 2;
    } else if ((c & 0xF0) == 0xE0) {
      cp = c & 0x0F;
      len = 3;
    } else if ((c & 0xF8) == 0xF0) {
      cp = c & 0x07;
      len = 4;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + len > s.size()) {
      out.push_back(kReplacement);
      break;
    }
    bool ok = true;
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (!ok || cp > 0x10FFFF) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string utf8_encode(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
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
  return out;
}

std::string normalize(std::string_view s) {
  std::vector<char32_t> cps = utf8_decode(s);

  // Compose base + combining mark pairs where a precomposed form exists.
  std::vector<char32_t> composed;
  composed.reserve(cps.size());
  for (char32_t cp : cps) {
    if (!composed.empty() && is_combining_mark(cp)) {
      if (char32_t c = compose(composed.back(), cp)) {
        composed.back() = c;
        continue;
      }
    }
    composed.push_back(cp);
  }

  std::vector<char32_t> out;
  out.reserve(composed.size());
  bool pending_space = false;
  for (char32_t cp : composed) {
    if (keeps(cp)) {
      if (pending_space && !out.empty()) out.push_back(' ');
      pending_space = false;
      out.push_back(to_lower_cp(cp));
    } else {
      pending_space = true;
    }
  }
  return utf8_encode(out);
}

std::vector<std::string> tokenize(std::string_view s) {
  std::string norm = normalize(s);
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < norm.size()) {
    std::size_t sp = norm.find(' ', pos);
    if (sp == std::string::npos) sp = norm.size();
    if (sp > pos) tokens.push_back(norm.substr(pos, sp - pos));
    pos = sp + 1;
  }
  return tokens;
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  std::vector<char32_t> ua = utf8_decode(a);
  std::vector<char32_t> ub = utf8_decode(b);
  if (ua.size() < ub.size()) std::swap(ua, ub);
  std::vector<std::size_t> row(ub.size() + 1);
  for (std::size_t j = 0; j <= ub.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= ua.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= ub.size(); ++j) {
      std::size_t sub = diag + (ua[i - 1] == ub[j - 1] ? 0 : 1);
      diag = row[j];
      row[j] = std::min({sub, row[j] + 1, row[j - 1] + 1});
    }
  }
  return row[ub.size()];
}

std::size_t levenshtein_tokens(const std::vector<std::string>& a,
                               const std::vector<std::string>& b) {
  const std::vector<std::string>& ua = a.size() >= b.size() ? a : b;
  const std::vector<std::string>& ub = a.size() >= b.size() ? b : a;
  std::vector<std::size_t> row(ub.size() + 1);
  for (std::size_t j = 0; j <= ub.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= ua.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= ub.size(); ++j) {
      std::size_t sub = diag + (ua[i - 1] == ub[j - 1] ? 0 : 1);
      diag = row[j];
      row[j] = std::min({sub, row[j] + 1, row[j - 1] + 1});
    }
  }
  return row[ub.size()];
}

double similarity(std::string_view a, std::string_view b) {
  std::size_t la = utf8_decode(a).size();
  std::size_t lb = utf8_decode(b).size();
  std::size_t longest = std::max(la, lb);
  if (longest == 0) return 1.0;
  std::size_t d = levenshtein(a, b);
  return 1.0 - static_cast<double>(d) / static_cast<double>(longest);
}

std::string soundex(std::string_view token) {
  if (token.empty()) throw std::invalid_argument("soundex: empty token");

  auto code = [](char c) -> char {
    switch (c) {
      case 'b': case 'f': case 'p': case 'v': return '1';
      case 'c': case 'g': case 'j': case 'k':
      case 'q': case 's': case 'x': case 'z': return '2';
      case 'd': case 't': return '3';
      case 'l': return '4';
      case 'm': case 'n': return '5';
      case 'r': return '6';
      default: return 0;  // vowels, h/w/y, and anything non-alphabetic
    }
  };

  std::string letters;
  for (char ch : token) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (c >= 'a' && c <= 'z') letters.push_back(static_cast<char>(c));
    else if (c >= 'A' && c <= 'Z') letters.push_back(static_cast<char>(c + 0x20));
  }
  if (letters.empty()) return "";

  std::string key;
  key.push_back(static_cast<char>(letters[0] - 0x20));
  char prev = code(letters[0]);
  for (std::size_t i = 1; i < letters.size() && key.size() < 4; ++i) {
    char c = code(letters[i]);
    if (c == 0) continue;  // skipped letters do not break adjacency
    if (c != prev) key.push_back(c);
    prev = c;
  }
  key.append(4 - key.size(), '0');
  return key;
}

std::string local_name(std::string_view iri) {
  std::size_t pos = iri.find_last_of("#/");
  std::string_view tail =
      pos == std::string_view::npos ? iri : iri.substr(pos + 1);
  return std::string(tail);
}

}  // namespace kglink::text
