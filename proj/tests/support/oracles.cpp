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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

namespace kglink::testsupport {
namespace {

std::size_t exhaustive(const std::vector<std::string>& a,
                       const std::vector<std::string>& b, std::size_t i,
                       std::size_t j) {
  if (i == a.size()) return b.size() - j;
  if (j == b.size()) return a.size() - i;
  std::size_t best = exhaustive(a, b, i + 1, j + 1) + (a[i] == b[j] ? 0 : 1);
  best = std::min(best, exhaustive(a, b, i + 1, j) + 1);
  best = std::min(best, exhaustive(a, b, i, j + 1) + 1);
  return best;
}

std::size_t memo_rec(const std::vector<std::string>& a,
                     const std::vector<std::string>& b, std::size_t i,
                     std::size_t j, std::vector<std::vector<std::size_t>>& memo) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  if (memo[i][j] != kUnset) return memo[i][j];
  std::size_t result;
  if (i == a.size()) {
    result = b.size() - j;
  } else if (j == b.size()) {
    result = a.size() - i;
  } else {
    result = memo_rec(a, b, i + 1, j + 1, memo) + (a[i] == b[j] ? 0 : 1);
    result = std::min(result, memo_rec(a, b, i + 1, j, memo) + 1);
    result = std::min(result, memo_rec(a, b, i, j + 1, memo) + 1);
  }
  memo[i][j] = result;
  return result;
}

}  // namespace

std::size_t edit_distance_exhaustive(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
  return exhaustive(a, b, 0, 0);
}

std::size_t edit_distance_memo(const std::vector<std::string>& a,
                               const std::vector<std::string>& b) {
  std::vector<std::vector<std::size_t>> memo(
      a.size() + 1, std::vector<std::size_t>(b.size() + 1,
                                             static_cast<std::size_t>(-1)));
  return memo_rec(a, b, 0, 0, memo);
}

std::size_t char_edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::string> ta;
  std::vector<std::string> tb;
  for (char c : a) ta.push_back(std::string(1, c));
  for (char c : b) tb.push_back(std::string(1, c));
  return edit_distance_memo(ta, tb);
}

double cosine_oracle(const std::vector<std::string>& a,
                     const std::vector<std::string>& b,
                     const std::vector<std::vector<std::string>>& documents) {
  std::map<std::string, std::size_t> df;
  for (const auto& doc : documents) {
    std::set<std::string> distinct(doc.begin(), doc.end());
    for (const auto& token : distinct) ++df[token];
  }
  auto idf = [&](const std::string& token) {
    double n = static_cast<double>(documents.size());
    double d = df.count(token) ? static_cast<double>(df.at(token)) : 0.0;
    return std::log((1.0 + n) / (1.0 + d)) + 1.0;
  };
  auto tf = [](const std::vector<std::string>& doc) {
    std::map<std::string, double> counts;
    for (const auto& token : doc) counts[token] += 1.0;
    return counts;
  };
  std::map<std::string, double> ta = tf(a);
  std::map<std::string, double> tb = tf(b);
  if (ta.empty() || tb.empty()) return 0.0;
  double dot = 0.0;
  for (const auto& [token, count] : ta) {
    auto it = tb.find(token);
    if (it != tb.end()) {
      dot += count * idf(token) * it->second * idf(token);
    }
  }
  if (dot == 0.0) return 0.0;
  double na = 0.0;
  for (const auto& [token, count] : ta) {
    na += count * idf(token) * count * idf(token);
  }
  double nb = 0.0;
  for (const auto& [token, count] : tb) {
    nb += count * idf(token) * count * idf(token);
  }
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

std::vector<Triple> random_document(std::uint64_t seed, std::size_t triples) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
  };

  auto random_iri = [&]() {
    static const char kSafe[] =
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-.~";
    std::string iri = "http://example.org/";
    std::size_t segments = 1 + pick(3);
    for (std::size_t s = 0; s < segments; ++s) {
      if (s > 0) iri += '/';
      std::size_t len = 1 + pick(10);
      for (std::size_t k = 0; k < len; ++k) {
        iri += kSafe[pick(sizeof(kSafe) - 1)];
      }
    }
    if (pick(4) == 0) {
      iri += "#f";
      iri += kSafe[pick(26)];
    }
    return iri;
  };

  auto random_literal_value = [&]() {
    static const std::vector<std::string> kPieces = {
        "plain", "zwei",   "ä",  "ü",     "müller", "愛",  " ",
        "\"",    "\\",     "\n", "\t",    "\r",     "a b", "030",
        "x-y",   "café", "ß", "(ok)", "100%",   ".",
    };
    std::size_t parts = 1 + pick(5);
    std::string value;
    for (std::size_t p = 0; p < parts; ++p) {
      value += kPieces[pick(kPieces.size())];
    }
    return value;
  };

  std::vector<Triple> out;
  out.reserve(triples);
  std::set<std::string> seen;
  auto key_of = [](const Triple& t) {
    return t.subject + '\x01' + t.predicate + '\x01' +
           (t.object.kind == TermKind::Iri ? "i" : "l") + t.object.value +
           '\x01' + t.object.lang + '\x01' + t.object.datatype;
  };
  while (out.size() < triples) {
    Triple triple;
    triple.subject = random_iri();
    triple.predicate = random_iri();
    switch (pick(4)) {
      case 0:
        triple.object = Term::iri(random_iri());
        break;
      case 1: {
        static const std::vector<std::string> kLangs = {"en", "de", "en-US",
                                                        "pt-BR"};
        triple.object =
            Term::literal(random_literal_value(), kLangs[pick(kLangs.size())]);
        break;
      }
      case 2:
        triple.object = Term::literal(random_literal_value(), "",
                                      random_iri());
        break;
      default:
        triple.object = Term::literal(random_literal_value());
        break;
    }
    if (seen.insert(key_of(triple)).second) out.push_back(std::move(triple));
  }
  return out;
}

}  // namespace kglink::testsupport
