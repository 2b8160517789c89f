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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kglink/graph.hpp"

namespace kglink {

// A surface string by which an IRI can be mentioned.
struct SurfaceForm {
  enum class Origin { Label, LocalName, Extra };

  std::string normalized;
  std::string iri;
  Origin origin = Origin::Label;
};

struct FuzzyMatch {
  std::string iri;
  double similarity = 0.0;

  friend bool operator==(const FuzzyMatch&, const FuzzyMatch&) = default;
};

struct IndexOptions {
  std::vector<std::string> label_predicates{std::string(kRdfsLabel)};
  // Spans longer than this are never spotted.
  int max_form_tokens = 3;
};

// Maps normalized surface strings to candidate IRIs. Forms come from label
// triples, from the local names of every entity and predicate in the graph
// (underscores read as spaces), and from optional extra forms. Immutable
// after build; safe for concurrent readers.
class SurfaceFormIndex {
 public:
  SurfaceFormIndex() = default;

  // extra forms must reference IRIs present in the graph.
  static SurfaceFormIndex build(const KnowledgeGraph& graph,
                                IndexOptions options = {},
                                const std::vector<SurfaceForm>& extra = {});

  // IRIs whose surface form is exactly normalize(surface). Lexicographically
  // sorted.
  std::vector<std::string> lookup_exact(std::string_view surface) const;

  // IRIs with a form within edit distance max_dist of normalize(surface),
  // best similarity per IRI, sorted by similarity descending then IRI.
  std::vector<FuzzyMatch> lookup_fuzzy(std::string_view surface,
                                       int max_dist) const;

  // IRIs whose whole-form phonetic key equals the given key. Keys are
  // Soundex codes computed over the form with spaces removed.
  std::vector<std::string> lookup_phonetic(std::string_view key) const;

  // Normalized surface forms registered for an IRI, in insertion order.
  const std::vector<std::string>& forms_of(const std::string& iri) const;

  // All (form, iris) pairs, ordered by form.
  const std::map<std::string, std::vector<std::string>>& forms() const {
    return exact_;
  }

  int max_form_tokens() const { return max_form_tokens_; }
  std::size_t size() const { return exact_.size(); }

 private:
  void insert(const std::string& normalized, const std::string& iri);

  std::map<std::string, std::vector<std::string>> exact_;
  std::map<std::string, std::vector<std::string>> phonetic_;
  std::map<std::string, std::vector<std::string>> by_iri_;
  int max_form_tokens_ = 3;
};

// Parses the supplementary `surface<TAB>iri` form file.
std::vector<SurfaceForm> parse_surface_forms_tsv(std::string_view text);

}  // namespace kglink
