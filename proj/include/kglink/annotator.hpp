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
#include <unordered_map>
#include <vector>

#include "kglink/graph.hpp"
#include "kglink/stopwords.hpp"
#include "kglink/surface_index.hpp"

namespace kglink {

// Multiset of normalized tokens.
class TokenBag {
 public:
  TokenBag() = default;

  static TokenBag from_tokens(const std::vector<std::string>& tokens);

  void add(const std::string& token, std::uint32_t count = 1);
  // Removes up to `count` occurrences.
  void remove(const std::string& token, std::uint32_t count = 1);

  std::uint32_t count(const std::string& token) const;
  bool empty() const { return counts_.empty(); }
  std::size_t distinct() const { return counts_.size(); }

  const std::unordered_map<std::string, std::uint32_t>& counts() const {
    return counts_;
  }

 private:
  std::unordered_map<std::string, std::uint32_t> counts_;
};

// Bag of words describing an entity: its literal values, its labels, the
// labels of adjacent entities in either direction, and the local names of
// the connecting predicates (label predicates excluded).
TokenBag context_model(const KnowledgeGraph& graph, const std::string& iri,
                       const std::vector<std::string>& label_predicates);

// Context models for every entity in a graph plus the document frequencies
// needed for TF-IDF weighting. One model counts as one document.
class ContextIndex {
 public:
  ContextIndex() = default;
  ContextIndex(const KnowledgeGraph& graph,
               const std::vector<std::string>& label_predicates);

  const TokenBag& model(const std::string& iri) const;
  double idf(const std::string& token) const;
  std::size_t documents() const { return models_.size(); }

  // TF-IDF cosine similarity in [0, 1]; 0 when either bag is empty.
  double cosine(const TokenBag& a, const TokenBag& b) const;

 private:
  std::unordered_map<std::string, TokenBag> models_;
  std::unordered_map<std::string, std::uint32_t> doc_freq_;
};

// Token span referring to one candidate mention, end exclusive.
struct Mention {
  std::size_t token_start = 0;
  std::size_t token_end = 0;
  std::string surface;

  friend bool operator==(const Mention&, const Mention&) = default;
};

// One disambiguated link with the full score breakdown.
struct ScoredLink {
  std::string entity;
  double prior = 0.0;
  double likelihood = 0.0;
  double contextual_score = 0.0;
  std::uint64_t support = 0;
  double topic_pertinence = 0.0;
  double percentage_of_second_rank = 0.0;
  double contextual_ambiguity = 1.0;
  double final_score = 0.0;
};

struct AnnotatedSentence {
  std::vector<std::string> tokens;
  std::vector<std::pair<Mention, ScoredLink>> links;
};

struct ScoreWeights {
  double prior = 1.0;
  double likelihood = 1.0;
  double contextual = 1.0;
};

enum class CandidateTier { Exact, ExactThenFuzzy };

struct AnnotatorOptions {
  std::vector<std::string> label_predicates{std::string(kRdfsLabel)};
  ScoreWeights weights;
  // When enabled, single unlinked non-stopword tokens fall back to fuzzy
  // candidate retrieval.
  bool fuzzy_fallback = false;
  int fuzzy_max_dist = 2;
  double epsilon = 1e-9;
};

// Spots mentions and disambiguates them against one immutable graph/index
// pair. All methods are const and safe to call concurrently.
class Annotator {
 public:
  Annotator(const KnowledgeGraph& graph, const SurfaceFormIndex& index,
            StopwordSet stopwords, AnnotatorOptions options = {});

  // Greedy left-to-right longest exact match, at most max_form_tokens
  // tokens per span; spans made only of stopwords are discarded.
  std::vector<Mention> spot(const std::vector<std::string>& tokens) const;

  // Scores every candidate and returns the winner. The sentence context is
  // the sentence token bag with the mention's own tokens removed.
  ScoredLink disambiguate(const Mention& mention,
                          const std::vector<std::string>& candidates,
                          const TokenBag& sentence_context) const;

  AnnotatedSentence annotate(const std::string& sentence) const;
  AnnotatedSentence annotate(const std::string& sentence,
                             CandidateTier tier) const;

  double prior(const std::string& iri) const;

  const KnowledgeGraph& graph() const { return graph_; }
  const SurfaceFormIndex& index() const { return index_; }
  const StopwordSet& stopwords() const { return stopwords_; }
  const ContextIndex& contexts() const { return contexts_; }
  const AnnotatorOptions& options() const { return options_; }

 private:
  const KnowledgeGraph& graph_;
  const SurfaceFormIndex& index_;
  StopwordSet stopwords_;
  AnnotatorOptions options_;
  ContextIndex contexts_;
};

}  // namespace kglink
