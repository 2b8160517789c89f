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

#include <cstdint>
#include <string>
#include <vector>

#include "kglink/corrector.hpp"

namespace kglink {

// Deterministic 64-bit generator (SplitMix64). The same seed yields the
// same stream on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, 1) with 53 random bits.
  double next_double();
  // Uniform in [0, bound). bound must be positive.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// Token-level recognition noise. Probabilities are per token: substitution
// and deletion are mutually exclusive, insertion is decided independently
// after each reference position. The vocabulary supplies substitution and
// insertion material and is kept sorted and deduplicated.
class ErrorModel {
 public:
  ErrorModel(double p_sub, double p_del, double p_ins,
             std::vector<std::string> vocabulary, std::uint64_t seed = 0);

  double p_sub() const { return p_sub_; }
  double p_del() const { return p_del_; }
  double p_ins() const { return p_ins_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<std::string>& vocabulary() const { return vocabulary_; }

  ErrorModel with_seed(std::uint64_t seed) const;

 private:
  double p_sub_;
  double p_del_;
  double p_ins_;
  std::uint64_t seed_;
  std::vector<std::string> vocabulary_;
};

// The vocabulary word most confusable with `word`: same Soundex key if any
// candidate has one, otherwise minimum edit distance, ties broken
// lexicographically. Returns `word` itself when the vocabulary offers no
// alternative.
std::string confusable(const std::string& word,
                       const std::vector<std::string>& vocabulary,
                       SplitMix64& rng);

// One corrupted reading of the reference tokens, drawn from the supplied
// generator state.
std::vector<std::string> corrupt(const std::vector<std::string>& tokens,
                                 const ErrorModel& model, SplitMix64& rng);

// As above, seeding the generator from the model.
std::vector<std::string> corrupt(const std::vector<std::string>& tokens,
                                 const ErrorModel& model);

// An n-best list for one utterance: rank r is corrupted with seed
// `model.seed() + r`, scored by token accuracy against the reference, and
// the list is ordered by score descending with ranks reassigned 1..n.
NBestList generate_nbest(const std::string& utt_id,
                         const std::vector<std::string>& reference,
                         const ErrorModel& model, int n);

}  // namespace kglink
