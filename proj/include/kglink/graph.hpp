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
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kglink/term.hpp"

namespace kglink {

// Immutable, fully indexed in-memory triple store. Duplicate statements are
// removed at load; all queries return triples in load order. Once built the
// graph is safe to share across concurrent readers.
class KnowledgeGraph {
 public:
  KnowledgeGraph() = default;

  static KnowledgeGraph load(std::vector<Triple> triples);

  const std::vector<Triple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }

  // Triples matching every bound position. Unbound positions match anything.
  std::vector<Triple> matching(const std::optional<std::string>& subject,
                               const std::optional<std::string>& predicate,
                               const std::optional<Term>& object) const;

  // Triples whose subject/object pair is {e1, e2} in either direction.
  // e1 and e2 must differ.
  std::vector<Triple> connecting(const std::string& e1,
                                 const std::string& e2) const;

  // All triples with the given entity as subject.
  std::vector<Triple> describe(const std::string& entity) const;

  // Degree-based prominence: occurrences of the IRI at subject or object
  // position (predicate occurrences excluded). Unknown IRIs have support 0.
  std::uint64_t support(const std::string& iri) const;

  // Sum of support over all entities.
  std::uint64_t total_support() const { return total_support_; }

  // Entities (IRIs at subject or object position) in first-appearance order.
  const std::vector<std::string>& entities() const { return entities_; }

  bool has_entity(const std::string& iri) const {
    return support_.count(iri) > 0;
  }
  bool is_predicate(const std::string& iri) const {
    return by_predicate_.count(iri) > 0;
  }

 private:
  std::vector<Triple> triples_;
  std::unordered_map<std::string, std::vector<std::uint32_t>> by_subject_;
  std::unordered_map<std::string, std::vector<std::uint32_t>> by_predicate_;
  std::unordered_map<Term, std::vector<std::uint32_t>, TermHash> by_object_;
  std::unordered_map<std::string, std::uint64_t> support_;
  std::vector<std::string> entities_;
  std::uint64_t total_support_ = 0;
};

}  // namespace kglink
