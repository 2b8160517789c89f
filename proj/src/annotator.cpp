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

#include "kglink/annotator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kglink/text.hpp"

namespace kglink {
namespace {

bool is_label_predicate(const std::string& iri,
                        const std::vector<std::string>& label_predicates) {
  return std::find(label_predicates.begin(), label_predicates.end(), iri) !=
         label_predicates.end();
}

void add_tokens(TokenBag& bag, const std::string& raw) {
  for (const auto& token : text::tokenize(raw)) bag.add(token);
}

void add_predicate_tokens(TokenBag& bag, const std::string& predicate) {
  std::string name = text::local_name(predicate);
  std::replace(name.begin(), name.end(), '_', ' ');
  add_tokens(bag, name);
}

// Tokens of every label literal attached to `iri`.
void add_label_tokens(const KnowledgeGraph& graph, const std::string& iri,
                      const std::vector<std::string>& label_predicates,
                      TokenBag& bag) {
  for (const auto& predicate : label_predicates) {
    for (const Triple& triple : graph.matching(iri, predicate, std::nullopt)) {
      if (triple.object.kind == TermKind::Literal) {
        add_tokens(bag, triple.object.value);
      }
    }
  }
}

}  // namespace

TokenBag TokenBag::from_tokens(const std::vector<std::string>& tokens) {
  TokenBag bag;
  for (const auto& token : tokens) bag.add(token);
  return bag;
}

void TokenBag::add(const std::string& token, std::uint32_t count) {
  if (count == 0) return;
  counts_[token] += count;
}

void TokenBag::remove(const std::string& token, std::uint32_t count) {
  auto it = counts_.find(token);
  if (it == counts_.end()) return;
  if (it->second <= count) {
    counts_.erase(it);
  } else {
    it->second -= count;
  }
}

std::uint32_t TokenBag::count(const std::string& token) const {
  auto it = counts_.find(token);
  return it == counts_.end() ? 0 : it->second;
}

TokenBag context_model(const KnowledgeGraph& graph, const std::string& iri,
                       const std::vector<std::string>& label_predicates) {
  TokenBag bag;
  for (const Triple& triple : graph.matching(iri, std::nullopt, std::nullopt)) {
    if (triple.object.kind == TermKind::Literal) {
      add_tokens(bag, triple.object.value);
    } else {
      add_label_tokens(graph, triple.object.value, label_predicates, bag);
    }
    if (!is_label_predicate(triple.predicate, label_predicates)) {
      add_predicate_tokens(bag, triple.predicate);
    }
  }
  Term as_object = Term::iri(iri);
  for (const Triple& triple :
       graph.matching(std::nullopt, std::nullopt, as_object)) {
    add_label_tokens(graph, triple.subject, label_predicates, bag);
    if (!is_label_predicate(triple.predicate, label_predicates)) {
      add_predicate_tokens(bag, triple.predicate);
    }
  }
  return bag;
}

ContextIndex::ContextIndex(const KnowledgeGraph& graph,
                           const std::vector<std::string>& label_predicates) {
  for (const auto& entity : graph.entities()) {
    TokenBag bag = context_model(graph, entity, label_predicates);
    for (const auto& [token, count] : bag.counts()) {
      (void)count;
      ++doc_freq_[token];
    }
    models_.emplace(entity, std::move(bag));
  }
}

const TokenBag& ContextIndex::model(const std::string& iri) const {
  static const TokenBag kEmpty;
  auto it = models_.find(iri);
  return it == models_.end() ? kEmpty : it->second;
}

double ContextIndex::idf(const std::string& token) const {
  auto it = doc_freq_.find(token);
  double df = it == doc_freq_.end() ? 0.0 : static_cast<double>(it->second);
  double n = static_cast<double>(models_.size());
  return std::log((1.0 + n) / (1.0 + df)) + 1.0;
}

double ContextIndex::cosine(const TokenBag& a, const TokenBag& b) const {
  if (a.empty() || b.empty()) return 0.0;
  double dot = 0.0;
  double norm_a = 0.0;
  for (const auto& [token, count] : a.counts()) {
    double weight = static_cast<double>(count) * idf(token);
    norm_a += weight * weight;
    std::uint32_t other = b.count(token);
    if (other > 0) dot += weight * static_cast<double>(other) * idf(token);
  }
  if (dot == 0.0) return 0.0;
  double norm_b = 0.0;
  for (const auto& [token, count] : b.counts()) {
    double weight = static_cast<double>(count) * idf(token);
    norm_b += weight * weight;
  }
  return dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
}

Annotator::Annotator(const KnowledgeGraph& graph,
                     const SurfaceFormIndex& index, StopwordSet stopwords,
                     AnnotatorOptions options)
    : graph_(graph),
      index_(index),
      stopwords_(std::move(stopwords)),
      options_(std::move(options)),
      contexts_(graph, options_.label_predicates) {
  if (options_.epsilon <= 0.0) {
    throw std::invalid_argument("score smoothing epsilon must be positive");
  }
  if (options_.fuzzy_max_dist < 0) {
    throw std::invalid_argument("fuzzy edit distance bound must be >= 0");
  }
}

std::vector<Mention> Annotator::spot(
    const std::vector<std::string>& tokens) const {
  std::vector<Mention> mentions;
  const std::size_t max_len =
      static_cast<std::size_t>(index_.max_form_tokens());
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t matched = 0;
    std::size_t longest = std::min(max_len, tokens.size() - i);
    for (std::size_t len = longest; len >= 1; --len) {
      std::string surface = tokens[i];
      for (std::size_t k = 1; k < len; ++k) {
        surface += ' ';
        surface += tokens[i + k];
      }
      if (index_.lookup_exact(surface).empty()) continue;
      bool all_stop = true;
      for (std::size_t k = 0; k < len; ++k) {
        if (!stopwords_.contains(tokens[i + k])) {
          all_stop = false;
          break;
        }
      }
      if (all_stop) continue;
      mentions.push_back(Mention{i, i + len, std::move(surface)});
      matched = len;
      break;
    }
    i += matched > 0 ? matched : 1;
  }
  return mentions;
}

ScoredLink Annotator::disambiguate(const Mention& mention,
                                   const std::vector<std::string>& candidates,
                                   const TokenBag& sentence_context) const {
  if (candidates.empty()) {
    throw std::invalid_argument("disambiguate requires at least one candidate");
  }
  std::vector<ScoredLink> scored;
  scored.reserve(candidates.size());
  const double eps = options_.epsilon;
  const ScoreWeights& w = options_.weights;
  for (const auto& iri : candidates) {
    ScoredLink link;
    link.entity = iri;
    link.support = graph_.support(iri);
    link.prior = prior(iri);
    for (const std::string& form : index_.forms_of(iri)) {
      link.likelihood =
          std::max(link.likelihood, text::similarity(form, mention.surface));
    }
    link.contextual_score =
        contexts_.cosine(contexts_.model(iri), sentence_context);
    double log_score = w.prior * std::log(link.prior + eps) +
                       w.likelihood * std::log(link.likelihood + eps) +
                       w.contextual * std::log(link.contextual_score + eps);
    link.final_score = std::min(1.0, std::exp(log_score));
    scored.push_back(std::move(link));
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < scored.size(); ++i) {
    if (scored[i].final_score > scored[best].final_score ||
        (scored[i].final_score == scored[best].final_score &&
         scored[i].entity < scored[best].entity)) {
      best = i;
    }
  }
  double second = 0.0;
  bool has_second = false;
  for (std::size_t i = 0; i < scored.size(); ++i) {
    if (i == best) continue;
    second = std::max(second, scored[i].final_score);
    has_second = true;
  }
  ScoredLink winner = scored[best];
  if (has_second && winner.final_score > 0.0) {
    winner.percentage_of_second_rank = second / winner.final_score;
  } else {
    winner.percentage_of_second_rank = 0.0;
  }
  winner.contextual_ambiguity = 1.0 - winner.percentage_of_second_rank;
  winner.topic_pertinence = winner.contextual_score;
  return winner;
}

AnnotatedSentence Annotator::annotate(const std::string& sentence) const {
  return annotate(sentence, options_.fuzzy_fallback
                                ? CandidateTier::ExactThenFuzzy
                                : CandidateTier::Exact);
}

AnnotatedSentence Annotator::annotate(const std::string& sentence,
                                      CandidateTier tier) const {
  AnnotatedSentence result;
  result.tokens = text::tokenize(sentence);
  TokenBag sentence_bag = TokenBag::from_tokens(result.tokens);
  std::vector<bool> covered(result.tokens.size(), false);

  for (const Mention& mention : spot(result.tokens)) {
    std::vector<std::string> candidates = index_.lookup_exact(mention.surface);
    TokenBag context = sentence_bag;
    for (std::size_t k = mention.token_start; k < mention.token_end; ++k) {
      context.remove(result.tokens[k]);
    }
    ScoredLink link = disambiguate(mention, candidates, context);
    for (std::size_t k = mention.token_start; k < mention.token_end; ++k) {
      covered[k] = true;
    }
    result.links.emplace_back(mention, std::move(link));
  }

  if (tier == CandidateTier::ExactThenFuzzy) {
    for (std::size_t i = 0; i < result.tokens.size(); ++i) {
      if (covered[i] || stopwords_.contains(result.tokens[i])) continue;
      std::vector<FuzzyMatch> matches =
          index_.lookup_fuzzy(result.tokens[i], options_.fuzzy_max_dist);
      if (matches.empty()) continue;
      std::vector<std::string> candidates;
      candidates.reserve(matches.size());
      for (const auto& match : matches) candidates.push_back(match.iri);
      Mention mention{i, i + 1, result.tokens[i]};
      TokenBag context = sentence_bag;
      context.remove(result.tokens[i]);
      ScoredLink link = disambiguate(mention, candidates, context);
      covered[i] = true;
      result.links.emplace_back(std::move(mention), std::move(link));
    }
    std::stable_sort(result.links.begin(), result.links.end(),
                     [](const auto& a, const auto& b) {
                       return a.first.token_start < b.first.token_start;
                     });
  }
  return result;
}

double Annotator::prior(const std::string& iri) const {
  std::uint64_t total = graph_.total_support();
  if (total == 0) return 0.0;
  return static_cast<double>(graph_.support(iri)) /
         static_cast<double>(total);
}

}  // namespace kglink
