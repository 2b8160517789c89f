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

#include "kglink/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace kglink {

KnowledgeGraph KnowledgeGraph::load(std::vector<Triple> triples) {
  KnowledgeGraph g;
  std::unordered_set<Triple, TripleHash> seen;
  g.triples_.reserve(triples.size());

  auto touch_entity = [&g](const std::string& iri) {
    auto [it, inserted] = g.support_.emplace(iri, 0);
    if (inserted) g.entities_.push_back(iri);
    ++it->second;
    ++g.total_support_;
  };

  for (Triple& t : triples) {
    if (!seen.insert(t).second) continue;
    std::uint32_t id = static_cast<std::uint32_t>(g.triples_.size());
    g.by_subject_[t.subject].push_back(id);
    g.by_predicate_[t.predicate].push_back(id);
    g.by_object_[t.object].push_back(id);
    touch_entity(t.subject);
    if (t.object.is_iri()) touch_entity(t.object.value);
    g.triples_.push_back(std::move(t));
  }
  return g;
}

std::vector<Triple> KnowledgeGraph::matching(
    const std::optional<std::string>& subject,
    const std::optional<std::string>& predicate,
    const std::optional<Term>& object) const {
  // Scan the shortest posting list among the bound positions.
  const std::vector<std::uint32_t>* postings = nullptr;
  auto consider = [&postings](const std::vector<std::uint32_t>& list) {
    if (postings == nullptr || list.size() < postings->size()) {
      postings = &list;
    }
  };

  static const std::vector<std::uint32_t> kEmpty;
  if (subject) {
    auto it = by_subject_.find(*subject);
    consider(it == by_subject_.end() ? kEmpty : it->second);
  }
  if (predicate) {
    auto it = by_predicate_.find(*predicate);
    consider(it == by_predicate_.end() ? kEmpty : it->second);
  }
  if (object) {
    auto it = by_object_.find(*object);
    consider(it == by_object_.end() ? kEmpty : it->second);
  }

  std::vector<Triple> out;
  auto matches = [&](const Triple& t) {
    if (subject && t.subject != *subject) return false;
    if (predicate && t.predicate != *predicate) return false;
    if (object && !(t.object == *object)) return false;
    return true;
  };

  if (postings == nullptr) return triples_;  // full scan
  out.reserve(postings->size());
  for (std::uint32_t id : *postings) {
    if (matches(triples_[id])) out.push_back(triples_[id]);
  }
  return out;
}

std::vector<Triple> KnowledgeGraph::connecting(const std::string& e1,
                                               const std::string& e2) const {
  if (e1 == e2) {
    throw std::invalid_argument(
        "connecting: the two entities must be distinct");
  }
  std::vector<std::pair<std::uint32_t, Triple>> hits;
  auto collect = [&](const std::string& s, const std::string& o) {
    auto it = by_subject_.find(s);
    if (it == by_subject_.end()) return;
    for (std::uint32_t id : it->second) {
      const Triple& t = triples_[id];
      if (t.object.is_iri() && t.object.value == o) hits.emplace_back(id, t);
    }
  };
  collect(e1, e2);
  collect(e2, e1);
  std::sort(hits.begin(), hits.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Triple> out;
  out.reserve(hits.size());
  for (auto& [id, t] : hits) out.push_back(std::move(t));
  return out;
}

std::vector<Triple> KnowledgeGraph::describe(const std::string& entity) const {
  auto it = by_subject_.find(entity);
  if (it == by_subject_.end()) return {};
  std::vector<Triple> out;
  out.reserve(it->second.size());
  for (std::uint32_t id : it->second) out.push_back(triples_[id]);
  return out;
}

std::uint64_t KnowledgeGraph::support(const std::string& iri) const {
  auto it = support_.find(iri);
  return it == support_.end() ? 0 : it->second;
}

}  // namespace kglink
