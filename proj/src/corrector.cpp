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

#include "kglink/corrector.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "kglink/text.hpp"

namespace kglink {
namespace {

struct LinkedTerms {
  std::vector<std::string> entities;
  std::vector<std::string> predicates;
  std::vector<bool> covered;
};

LinkedTerms collect_linked(const AnnotatedSentence& sentence,
                           const KnowledgeGraph& graph) {
  LinkedTerms out;
  out.covered.assign(sentence.tokens.size(), false);
  std::set<std::string> entities;
  std::set<std::string> predicates;
  for (const auto& [mention, link] : sentence.links) {
    if (graph.has_entity(link.entity)) entities.insert(link.entity);
    if (graph.is_predicate(link.entity)) predicates.insert(link.entity);
    for (std::size_t k = mention.token_start; k < mention.token_end; ++k) {
      if (k < out.covered.size()) out.covered[k] = true;
    }
  }
  out.entities.assign(entities.begin(), entities.end());
  out.predicates.assign(predicates.begin(), predicates.end());
  return out;
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c != ' ') out.push_back(c);
  }
  return out;
}

}  // namespace

void NBestList::validate() const {
  if (hypotheses.empty()) {
    throw std::invalid_argument("n-best list must not be empty");
  }
  std::vector<int> ranks;
  ranks.reserve(hypotheses.size());
  for (const auto& hyp : hypotheses) {
    if (hyp.utt_id != hypotheses.front().utt_id) {
      throw std::invalid_argument(
          "n-best list mixes utterances: " + hypotheses.front().utt_id +
          " and " + hyp.utt_id);
    }
    ranks.push_back(hyp.rank);
  }
  std::sort(ranks.begin(), ranks.end());
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] != static_cast<int>(i) + 1) {
      throw std::invalid_argument("n-best ranks must be 1.." +
                                  std::to_string(ranks.size()) +
                                  " without gaps");
    }
  }
}

NBestList NBestList::sorted() const {
  validate();
  NBestList out = *this;
  std::sort(out.hypotheses.begin(), out.hypotheses.end(),
            [](const Hypothesis& a, const Hypothesis& b) {
              return a.rank < b.rank;
            });
  return out;
}

const std::string& NBestList::utt_id() const {
  if (hypotheses.empty()) {
    throw std::invalid_argument("n-best list must not be empty");
  }
  return hypotheses.front().utt_id;
}

std::uint64_t coherence(const AnnotatedSentence& sentence,
                        const KnowledgeGraph& graph) {
  LinkedTerms linked = collect_linked(sentence, graph);
  std::uint64_t score = 0;
  for (std::size_t i = 0; i < linked.entities.size(); ++i) {
    for (std::size_t j = i + 1; j < linked.entities.size(); ++j) {
      if (!graph.connecting(linked.entities[i], linked.entities[j]).empty()) {
        ++score;
      }
    }
  }
  std::set<std::string> entity_set(linked.entities.begin(),
                                   linked.entities.end());
  for (const auto& predicate : linked.predicates) {
    for (const Triple& triple :
         graph.matching(std::nullopt, predicate, std::nullopt)) {
      if (triple.object.kind != TermKind::Iri) continue;
      if (entity_set.count(triple.subject) > 0 &&
          entity_set.count(triple.object.value) > 0) {
        ++score;
        break;
      }
    }
  }
  return score;
}

std::vector<Correction> propose_corrections(const AnnotatedSentence& sentence,
                                            const Annotator& annotator,
                                            double min_similarity) {
  if (min_similarity < 0.0 || min_similarity > 1.0) {
    throw std::invalid_argument("min_similarity must lie in [0, 1]");
  }
  const KnowledgeGraph& graph = annotator.graph();
  const SurfaceFormIndex& index = annotator.index();
  LinkedTerms linked = collect_linked(sentence, graph);

  // Missing endpoints of triples whose predicate and other endpoint are
  // already linked, with one completing triple each.
  std::vector<std::pair<std::string, Triple>> candidates;
  std::set<std::string> seen;
  for (const auto& predicate : linked.predicates) {
    for (const auto& entity : linked.entities) {
      for (const Triple& triple :
           graph.matching(std::nullopt, predicate, Term::iri(entity))) {
        if (seen.insert(triple.subject).second) {
          candidates.emplace_back(triple.subject, triple);
        }
      }
      for (const Triple& triple :
           graph.matching(entity, predicate, std::nullopt)) {
        if (triple.object.kind != TermKind::Iri) continue;
        if (seen.insert(triple.object.value).second) {
          candidates.emplace_back(triple.object.value, triple);
        }
      }
    }
  }
  if (candidates.empty()) return {};

  // Keyed by (token index, entity), keeping the best similarity.
  std::map<std::pair<std::size_t, std::string>, Correction> best;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (i < linked.covered.size() && linked.covered[i]) continue;
    const std::string& token = sentence.tokens[i];
    if (annotator.stopwords().contains(token)) continue;
    std::string token_key = text::soundex(token);
    for (const auto& [entity, triple] : candidates) {
      double best_sim = -1.0;
      const std::string* best_form = nullptr;
      for (const std::string& form : index.forms_of(entity)) {
        bool phonetic = !token_key.empty() &&
                        token_key == text::soundex(strip_spaces(form));
        double sim = text::similarity(token, form);
        if (!phonetic && sim < min_similarity) continue;
        if (sim > best_sim || (sim == best_sim && form < *best_form)) {
          best_sim = sim;
          best_form = &form;
        }
      }
      if (best_form == nullptr) continue;
      Correction correction{i, token, *best_form, entity, triple, best_sim};
      auto key = std::make_pair(i, entity);
      auto it = best.find(key);
      if (it == best.end() || correction.similarity > it->second.similarity) {
        best.insert_or_assign(key, std::move(correction));
      }
    }
  }

  std::vector<Correction> out;
  out.reserve(best.size());
  for (auto& [key, correction] : best) out.push_back(std::move(correction));
  std::sort(out.begin(), out.end(),
            [](const Correction& a, const Correction& b) {
              if (a.similarity != b.similarity) {
                return a.similarity > b.similarity;
              }
              if (a.token_index != b.token_index) {
                return a.token_index < b.token_index;
              }
              return a.entity < b.entity;
            });
  return out;
}

std::vector<RescoredHypothesis> rescore(const NBestList& nbest,
                                        const Annotator& annotator,
                                        const CorrectorOptions& options) {
  if (options.lambda < 0.0 || options.lambda > 1.0) {
    throw std::invalid_argument("lambda must lie in [0, 1]");
  }
  NBestList list = nbest.sorted();

  std::vector<RescoredHypothesis> out;
  out.reserve(list.hypotheses.size());
  for (const Hypothesis& hyp : list.hypotheses) {
    AnnotatedSentence annotated = annotator.annotate(hyp.text);
    std::vector<Correction> proposals =
        propose_corrections(annotated, annotator, options.min_similarity);

    RescoredHypothesis entry;
    entry.hypothesis = hyp;
    std::vector<std::string> tokens = annotated.tokens;
    std::set<std::size_t> replaced;
    for (const Correction& correction : proposals) {
      if (!replaced.insert(correction.token_index).second) continue;
      tokens[correction.token_index] = correction.replacement;
      entry.applied.push_back(correction);
    }
    std::string corrected;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
      if (k > 0) corrected += ' ';
      corrected += tokens[k];
    }
    entry.text = corrected;
    if (entry.applied.empty()) {
      entry.coherence = coherence(annotated, annotator.graph());
    } else {
      entry.coherence =
          coherence(annotator.annotate(corrected), annotator.graph());
    }
    out.push_back(std::move(entry));
  }

  double min_asr = out.front().hypothesis.asr_score;
  double max_asr = min_asr;
  std::uint64_t max_coherence = 0;
  for (const auto& entry : out) {
    min_asr = std::min(min_asr, entry.hypothesis.asr_score);
    max_asr = std::max(max_asr, entry.hypothesis.asr_score);
    max_coherence = std::max(max_coherence, entry.coherence);
  }
  for (auto& entry : out) {
    double asr_norm =
        max_asr == min_asr
            ? 1.0
            : (entry.hypothesis.asr_score - min_asr) / (max_asr - min_asr);
    double coh_norm = static_cast<double>(entry.coherence) /
                      static_cast<double>(std::max<std::uint64_t>(1, max_coherence));
    entry.combined_score =
        options.lambda * asr_norm + (1.0 - options.lambda) * coh_norm;
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const RescoredHypothesis& a, const RescoredHypothesis& b) {
                     if (a.combined_score != b.combined_score) {
                       return a.combined_score > b.combined_score;
                     }
                     return a.hypothesis.rank < b.hypothesis.rank;
                   });
  return out;
}

}  // namespace kglink
