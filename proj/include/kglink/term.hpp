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

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace kglink {

enum class TermKind { Iri, Literal };

// An RDF term: an absolute IRI, or a literal with an optional language tag
// or datatype IRI (never both).
struct Term {
  TermKind kind = TermKind::Iri;
  std::string value;
  std::string lang;      // literals only
  std::string datatype;  // literals only

  static Term iri(std::string v) {
    Term t;
    t.kind = TermKind::Iri;
    t.value = std::move(v);
    return t;
  }

  static Term literal(std::string v, std::string lang_tag = {},
                      std::string datatype_iri = {}) {
    Term t;
    t.kind = TermKind::Literal;
    t.value = std::move(v);
    t.lang = std::move(lang_tag);
    t.datatype = std::move(datatype_iri);
    return t;
  }

  bool is_iri() const { return kind == TermKind::Iri; }
  bool is_literal() const { return kind == TermKind::Literal; }

  friend bool operator==(const Term&, const Term&) = default;
};

// A statement. Subject and predicate are always IRIs.
struct Triple {
  std::string subject;
  std::string predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
};

struct TermHash {
  std::size_t operator()(const Term& t) const {
    std::size_t h = std::hash<std::string>{}(t.value);
    auto mix = [&h](std::size_t v) {
      h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    };
    mix(static_cast<std::size_t>(t.kind));
    mix(std::hash<std::string>{}(t.lang));
    mix(std::hash<std::string>{}(t.datatype));
    return h;
  }
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const {
    std::hash<std::string> sh;
    TermHash th;
    std::size_t h = sh(t.subject);
    h ^= sh(t.predicate) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h ^= th(t.object) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// The default label property consulted when building surface forms and
// context models.
inline constexpr std::string_view kRdfsLabel =
    "http://www.w3.org/2000/01/rdf-schema#label";

}  // namespace kglink
