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

#include "kglink/surface_index.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "kglink/ntriples.hpp"
#include "kglink/text.hpp"

namespace kglink {

namespace {

std::string phonetic_key_of_form(const std::string& normalized) {
  std::string joined;
  joined.reserve(normalized.size());
  for (char c : normalized) {
    if (c != ' ') joined.push_back(c);
  }
  if (joined.empty()) return "";
  return text::soundex(joined);
}

std::string local_name_form(const std::string& iri) {
  std::string name = text::local_name(iri);
  std::replace(name.begin(), name.end(), '_', ' ');
  return text::normalize(name);
}

}  // namespace

void SurfaceFormIndex::insert(const std::string& normalized,
                              const std::string& iri) {
  if (normalized.empty()) return;
  auto& iris = exact_[normalized];
  if (std::find(iris.begin(), iris.end(), iri) == iris.end()) {
    iris.push_back(iri);
  }
  auto& forms = by_iri_[iri];
  if (std::find(forms.begin(), forms.end(), normalized) == forms.end()) {
    forms.push_back(normalized);
  }
  std::string key = phonetic_key_of_form(normalized);
  if (!key.empty()) {
    auto& phon = phonetic_[key];
    if (std::find(phon.begin(), phon.end(), iri) == phon.end()) {
      phon.push_back(iri);
    }
  }
}

SurfaceFormIndex SurfaceFormIndex::build(const KnowledgeGraph& graph,
                                         IndexOptions options,
                                         const std::vector<SurfaceForm>& extra) {
  if (options.label_predicates.empty()) {
    throw std::invalid_argument("build: label predicate set is empty");
  }
  if (options.max_form_tokens < 1) {
    throw std::invalid_argument("build: max_form_tokens must be positive");
  }

  SurfaceFormIndex index;
  index.max_form_tokens_ = options.max_form_tokens;

  std::unordered_set<std::string> label_preds(
      options.label_predicates.begin(), options.label_predicates.end());

  // Label triples.
  for (const Triple& t : graph.triples()) {
    if (t.object.is_literal() && label_preds.count(t.predicate) > 0) {
      index.insert(text::normalize(t.object.value), t.subject);
    }
  }

  // Local names of entities and predicates.
  for (const std::string& entity : graph.entities()) {
    index.insert(local_name_form(entity), entity);
  }
  std::unordered_set<std::string> seen_preds;
  for (const Triple& t : graph.triples()) {
    if (seen_preds.insert(t.predicate).second) {
      index.insert(local_name_form(t.predicate), t.predicate);
    }
  }

  for (const SurfaceForm& form : extra) {
    if (!graph.has_entity(form.iri) && !graph.is_predicate(form.iri)) {
      throw std::invalid_argument(
          "build: extra surface form references an IRI absent from the "
          "graph: " + form.iri);
    }
    index.insert(text::normalize(form.normalized), form.iri);
  }

  // Deterministic candidate order.
  for (auto& [form, iris] : index.exact_) std::sort(iris.begin(), iris.end());
  for (auto& [key, iris] : index.phonetic_) std::sort(iris.begin(), iris.end());
  return index;
}

std::vector<std::string> SurfaceFormIndex::lookup_exact(
    std::string_view surface) const {
  auto it = exact_.find(text::normalize(surface));
  return it == exact_.end() ? std::vector<std::string>{} : it->second;
}

std::vector<FuzzyMatch> SurfaceFormIndex::lookup_fuzzy(
    std::string_view surface, int max_dist) const {
  std::string needle = text::normalize(surface);
  std::map<std::string, double> best;
  for (const auto& [form, iris] : exact_) {
    std::size_t dist = text::levenshtein(needle, form);
    if (dist > static_cast<std::size_t>(max_dist)) continue;
    double sim = text::similarity(needle, form);
    for (const std::string& iri : iris) {
      auto [it, inserted] = best.emplace(iri, sim);
      if (!inserted && sim > it->second) it->second = sim;
    }
  }
  std::vector<FuzzyMatch> out;
  out.reserve(best.size());
  for (const auto& [iri, sim] : best) out.push_back({iri, sim});
  std::stable_sort(out.begin(), out.end(),
                   [](const FuzzyMatch& a, const FuzzyMatch& b) {
                     if (a.similarity != b.similarity) {
                       return a.similarity > b.similarity;
                     }
                     return a.iri < b.iri;
                   });
  return out;
}

std::vector<std::string> SurfaceFormIndex::lookup_phonetic(
    std::string_view key) const {
  auto it = phonetic_.find(std::string(key));
  return it == phonetic_.end() ? std::vector<std::string>{} : it->second;
}

const std::vector<std::string>& SurfaceFormIndex::forms_of(
    const std::string& iri) const {
  static const std::vector<std::string> kNone;
  auto it = by_iri_.find(iri);
  return it == by_iri_.end() ? kNone : it->second;
}

std::vector<SurfaceForm> parse_surface_forms_tsv(std::string_view text) {
  std::vector<SurfaceForm> forms;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = eol + 1;
    if (line.empty() || line.front() == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError(line_no, line, "expected surface<TAB>iri");
    }
    SurfaceForm form;
    form.normalized = std::string(line.substr(0, tab));
    form.iri = std::string(line.substr(tab + 1));
    form.origin = SurfaceForm::Origin::Extra;
    if (form.normalized.empty() || form.iri.empty()) {
      throw ParseError(line_no, line, "empty surface or IRI");
    }
    forms.push_back(std::move(form));
  }
  return forms;
}

}  // namespace kglink
