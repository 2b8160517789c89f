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

#include <string>

#include "kglink/annotator.hpp"
#include "kglink/formats.hpp"
#include "kglink/graph.hpp"
#include "kglink/stopwords.hpp"
#include "kglink/surface_index.hpp"

namespace kglink::testsupport {

inline constexpr const char* kBerlin = "http://dbpedia.org/resource/Berlin";
inline constexpr const char* kGermany = "http://dbpedia.org/resource/Germany";
inline constexpr const char* kMueller =
    "http://dbpedia.org/resource/Michael_M\xC3\xBCller";
inline constexpr const char* kCountry = "http://dbpedia.org/ontology/country";
inline constexpr const char* kLeader = "http://dbpedia.org/ontology/leader";
inline constexpr const char* kAreaCode =
    "http://dbpedia.org/ontology/areaCode";
inline constexpr const char* kCapital = "http://dbpedia.org/ontology/capital";
inline constexpr const char* kLabel =
    "http://www.w3.org/2000/01/rdf-schema#label";

inline std::string data_path(const std::string& name) {
  return std::string(KGLINK_DATA_DIR "/") + name;
}

inline const KnowledgeGraph& fixture_graph() {
  static const KnowledgeGraph graph = load_graph_file(data_path("fixture.nt"));
  return graph;
}

inline const SurfaceFormIndex& fixture_index() {
  static const SurfaceFormIndex index = SurfaceFormIndex::build(fixture_graph());
  return index;
}

inline const Annotator& fixture_annotator() {
  static const Annotator annotator(fixture_graph(), fixture_index(),
                                   StopwordSet::defaults());
  return annotator;
}

}  // namespace kglink::testsupport
