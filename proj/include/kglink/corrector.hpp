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

#include "kglink/annotator.hpp"
#include "kglink/graph.hpp"

namespace kglink {

struct Hypothesis {
  std::string utt_id;
  int rank = 1;
  double asr_score = 0.0;
  std::string text;
};

// Recognition hypotheses for one utterance, ranks 1..n without gaps.
struct NBestList {
  std::vector<Hypothesis> hypotheses;

  // Throws std::invalid_argument when empty, when utterance ids differ, or
  // when ranks are not a permutation of 1..n.
  void validate() const;
  // Validated copy sorted by rank.
  NBestList sorted() const;
  const std::string& utt_id() const;
};

// Replacement of one token by a surface form of a graph entity that would
// complete a triple with already linked terms.
struct Correction {
  std::size_t token_index = 0;
  std::string original_word;
  std::string replacement;
  std::string entity;
  Triple completed_triple;
  double similarity = 0.0;
};

// Number of connected unordered pairs among linked entities plus one for
// each linked predicate that relates some pair of linked entities.
std::uint64_t coherence(const AnnotatedSentence& sentence,
                        const KnowledgeGraph& graph);

// Candidate repairs for tokens the annotator could not link. Anchored on
// pairs of one linked predicate and one linked entity; every graph triple
// completing such a pair nominates its missing endpoint, and an unlinked
// token is repaired when it matches one of that endpoint's surface forms
// phonetically or with similarity at or above min_similarity. Deduplicated
// per (token, entity), ordered by similarity, then token index, then IRI.
std::vector<Correction> propose_corrections(const AnnotatedSentence& sentence,
                                            const Annotator& annotator,
                                            double min_similarity);

struct RescoredHypothesis {
  Hypothesis hypothesis;
  // Hypothesis text after applying the corrections, token-joined.
  std::string text;
  std::vector<Correction> applied;
  std::uint64_t coherence = 0;
  double combined_score = 0.0;
};

struct CorrectorOptions {
  // Weight of the recognizer score against graph coherence.
  double lambda = 0.5;
  double min_similarity = 0.6;
};

// Annotates every hypothesis, applies the proposed corrections greedily on
// distinct token positions, and reranks by the mixture of the normalized
// recognizer score and normalized coherence. Ties keep the original rank
// order.
std::vector<RescoredHypothesis> rescore(const NBestList& nbest,
                                        const Annotator& annotator,
                                        const CorrectorOptions& options = {});

}  // namespace kglink
