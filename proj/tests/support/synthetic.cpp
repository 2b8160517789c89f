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

#include "synthetic.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "kglink/text.hpp"

namespace kglink::testsupport {
namespace {

constexpr const char* kEntityBase = "http://example.org/entity/";
constexpr const char* kOntologyBase = "http://example.org/ontology/";
constexpr const char* kLabelIri = "http://www.w3.org/2000/01/rdf-schema#label";

const std::vector<std::string> kSyllables = {
    "ba", "be", "bo", "da", "de", "di", "ka", "ke", "ko", "la",
    "le", "li", "ma", "me", "mo", "na", "ne", "no", "ra", "re",
    "ro", "sa", "se", "so", "ta", "te", "to", "va", "ve", "vo"};

const std::vector<std::string> kPredicates = {"locatedIn", "partnerOf",
                                              "leaderOf", "memberOf",
                                              "relatedTo"};

std::string capitalize(std::string word) {
  if (!word.empty()) {
    word[0] = static_cast<char>(word[0] - 'a' + 'A');
  }
  return word;
}

}  // namespace

SyntheticWorld make_synthetic_kg(std::size_t entity_count,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
  };

  SyntheticWorld world;
  std::set<std::string> used_names;
  while (world.entity_names.size() < entity_count) {
    std::size_t syllables = 2 + pick(2);
    std::string name;
    for (std::size_t s = 0; s < syllables; ++s) {
      name += kSyllables[pick(kSyllables.size())];
    }
    if (!used_names.insert(name).second) continue;
    world.entity_names.push_back(name);
    world.entity_iris.push_back(kEntityBase + capitalize(name));
  }

  for (std::size_t i = 0; i < entity_count; ++i) {
    world.triples.push_back(
        Triple{world.entity_iris[i], kLabelIri,
               Term::literal(capitalize(world.entity_names[i]))});
  }

  std::set<std::string> edge_keys;
  for (std::size_t i = 0; i < entity_count; ++i) {
    std::size_t edges = 1 + pick(3);
    for (std::size_t e = 0; e < edges; ++e) {
      std::size_t other = pick(entity_count);
      if (other == i) other = (other + 1) % entity_count;
      std::string predicate =
          std::string(kOntologyBase) + kPredicates[pick(kPredicates.size())];
      std::string key =
          world.entity_iris[i] + '|' + predicate + '|' + world.entity_iris[other];
      if (!edge_keys.insert(key).second) continue;
      world.triples.push_back(Triple{world.entity_iris[i], predicate,
                                     Term::iri(world.entity_iris[other])});
    }
  }

  for (std::size_t i = 0; i < entity_count; i += 3) {
    std::string code = std::to_string(100 + pick(900));
    world.triples.push_back(Triple{world.entity_iris[i],
                                   std::string(kOntologyBase) + "code",
                                   Term::literal(code)});
  }
  return world;
}

std::vector<CorpusSentence> make_corpus(const SyntheticWorld& world,
                                        std::size_t sentences,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
  };

  // Edges between two entities, as (subject name, object name) pairs.
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const Triple& t : world.triples) {
    if (!t.object.is_iri()) continue;
    auto find_name = [&world](const std::string& iri) -> const std::string& {
      for (std::size_t i = 0; i < world.entity_iris.size(); ++i) {
        if (world.entity_iris[i] == iri) return world.entity_names[i];
      }
      throw std::invalid_argument("unknown entity in synthetic world: " + iri);
    };
    pairs.emplace_back(find_name(t.subject), find_name(t.object.value));
  }
  if (pairs.empty()) {
    throw std::invalid_argument("synthetic world has no entity edges");
  }

  const std::vector<std::string> kTemplates = {
      "the %a works beside %b most days",
      "%a visits %b during the long week",
      "people often see %a near %b there",
      "one report pairs %a with %b again",
      "%a and %b follow the same plan",
      "crowds around %a keep praising %b loudly",
  };

  std::vector<CorpusSentence> corpus;
  corpus.reserve(sentences);
  for (std::size_t i = 0; i < sentences; ++i) {
    const auto& [a, b] = pairs[pick(pairs.size())];
    std::string text = kTemplates[pick(kTemplates.size())];
    auto replace = [&text](const std::string& tag, const std::string& value) {
      std::size_t at = text.find(tag);
      text = text.substr(0, at) + value + text.substr(at + tag.size());
    };
    replace("%a", a);
    replace("%b", b);
    std::string id = "utt" + std::to_string(1000 + i);
    corpus.push_back(CorpusSentence{std::move(id), std::move(text)});
  }
  return corpus;
}

std::vector<std::string> corpus_vocabulary(
    const std::vector<CorpusSentence>& corpus) {
  std::set<std::string> vocab;
  for (const CorpusSentence& sentence : corpus) {
    for (const auto& token : text::tokenize(sentence.text)) {
      vocab.insert(token);
    }
  }
  return std::vector<std::string>(vocab.begin(), vocab.end());
}

}  // namespace kglink::testsupport
