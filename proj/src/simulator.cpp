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

#include "kglink/simulator.hpp"

#include <algorithm>
#include <stdexcept>

#include "kglink/text.hpp"

namespace kglink {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_double() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("next_below requires a positive bound");
  }
  return static_cast<std::uint64_t>(next_double() *
                                    static_cast<double>(bound));
}

ErrorModel::ErrorModel(double p_sub, double p_del, double p_ins,
                       std::vector<std::string> vocabulary, std::uint64_t seed)
    : p_sub_(p_sub), p_del_(p_del), p_ins_(p_ins), seed_(seed) {
  auto in_range = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!in_range(p_sub) || !in_range(p_del) || !in_range(p_ins)) {
    throw std::invalid_argument("error probabilities must lie in [0, 1]");
  }
  if (p_sub + p_del > 1.0) {
    throw std::invalid_argument(
        "substitution and deletion probabilities must sum to at most 1");
  }
  for (const auto& word : vocabulary) {
    for (const auto& token : text::tokenize(word)) {
      vocabulary_.push_back(token);
    }
  }
  std::sort(vocabulary_.begin(), vocabulary_.end());
  vocabulary_.erase(std::unique(vocabulary_.begin(), vocabulary_.end()),
                    vocabulary_.end());
  if (vocabulary_.empty() && (p_sub > 0.0 || p_ins > 0.0)) {
    throw std::invalid_argument(
        "substitution and insertion require a non-empty vocabulary");
  }
}

ErrorModel ErrorModel::with_seed(std::uint64_t seed) const {
  ErrorModel copy = *this;
  copy.seed_ = seed;
  return copy;
}

std::string confusable(const std::string& word,
                       const std::vector<std::string>& vocabulary,
                       SplitMix64& rng) {
  (void)rng;
  std::string key = text::soundex(word);
  const std::string* best = nullptr;
  bool best_phonetic = false;
  std::size_t best_dist = 0;
  for (const auto& candidate : vocabulary) {
    if (candidate == word) continue;
    bool phonetic = !key.empty() && text::soundex(candidate) == key;
    std::size_t dist = text::levenshtein(word, candidate);
    if (best == nullptr || (phonetic && !best_phonetic) ||
        (phonetic == best_phonetic &&
         (dist < best_dist || (dist == best_dist && candidate < *best)))) {
      best = &candidate;
      best_phonetic = phonetic;
      best_dist = dist;
    }
  }
  return best == nullptr ? word : *best;
}

std::vector<std::string> corrupt(const std::vector<std::string>& tokens,
                                 const ErrorModel& model, SplitMix64& rng) {
  std::vector<std::string> out;
  out.reserve(tokens.size() + 2);
  for (const auto& token : tokens) {
    double u = rng.next_double();
    if (u < model.p_sub()) {
      out.push_back(confusable(token, model.vocabulary(), rng));
    } else if (u < model.p_sub() + model.p_del()) {
      // dropped
    } else {
      out.push_back(token);
    }
    double v = rng.next_double();
    if (v < model.p_ins()) {
      out.push_back(
          model.vocabulary()[rng.next_below(model.vocabulary().size())]);
    }
  }
  return out;
}

std::vector<std::string> corrupt(const std::vector<std::string>& tokens,
                                 const ErrorModel& model) {
  SplitMix64 rng(model.seed());
  return corrupt(tokens, model, rng);
}

NBestList generate_nbest(const std::string& utt_id,
                         const std::vector<std::string>& reference,
                         const ErrorModel& model, int n) {
  if (n < 1) throw std::invalid_argument("n-best size must be at least 1");
  if (reference.empty()) {
    throw std::invalid_argument("reference for " + utt_id + " is empty");
  }
  NBestList list;
  for (int rank = 1; rank <= n; ++rank) {
    SplitMix64 rng(model.seed() + static_cast<std::uint64_t>(rank));
    std::vector<std::string> tokens = corrupt(reference, model, rng);
    std::string joined;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
      if (k > 0) joined += ' ';
      joined += tokens[k];
    }
    double dist = static_cast<double>(text::levenshtein_tokens(
        reference, tokens));
    double score = 1.0 - dist / static_cast<double>(reference.size());
    list.hypotheses.push_back(Hypothesis{utt_id, rank, score, joined});
  }
  std::stable_sort(list.hypotheses.begin(), list.hypotheses.end(),
                   [](const Hypothesis& a, const Hypothesis& b) {
                     return a.asr_score > b.asr_score;
                   });
  for (std::size_t i = 0; i < list.hypotheses.size(); ++i) {
    list.hypotheses[i].rank = static_cast<int>(i) + 1;
  }
  return list;
}

}  // namespace kglink
