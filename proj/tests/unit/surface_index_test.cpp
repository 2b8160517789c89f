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

#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

#include "fixture.hpp"
#include "kglink/ntriples.hpp"
#include "kglink/text.hpp"

using namespace kglink;
namespace ts = kglink::testsupport;

namespace {

KnowledgeGraph two_paris_graph() {
  return KnowledgeGraph::load(parse_ntriples(
      "<http://e/Paris_France> <http://www.w3.org/2000/01/rdf-schema#label> "
      "\"Paris\" .\n"
      "<http://e/Paris_Texas> <http://www.w3.org/2000/01/rdf-schema#label> "
      "\"Paris\" .\n"));
}

}  // namespace

TEST_CASE("index collects labels and local names from the fixture") {
  const SurfaceFormIndex& index = ts::fixture_index();
  CHECK(index.size() == 8);
  CHECK(index.forms().count("berlin") == 1);
  CHECK(index.forms().count("michael m\xC3\xBC"
                            "ller") == 1);
  CHECK(index.forms().count("areacode") == 1);
  CHECK(index.forms_of(ts::kBerlin) == std::vector<std::string>{"berlin"});
}

TEST_CASE("exact lookup normalizes the query") {
  const SurfaceFormIndex& index = ts::fixture_index();
  CHECK(index.lookup_exact("Berlin") ==
        std::vector<std::string>{ts::kBerlin});
  CHECK(index.lookup_exact("  BERLIN! ") ==
        std::vector<std::string>{ts::kBerlin});
  CHECK(index.lookup_exact("Michael_M\xC3\xBC"
                           "ller") == std::vector<std::string>{ts::kMueller});
  CHECK(index.lookup_exact("capital") ==
        std::vector<std::string>{ts::kCapital});
  CHECK(index.lookup_exact("nope").empty());
}

TEST_CASE("ambiguous forms return candidates in IRI order") {
  KnowledgeGraph graph = two_paris_graph();
  SurfaceFormIndex index = SurfaceFormIndex::build(graph);
  auto candidates = index.lookup_exact("paris");
  REQUIRE(candidates.size() == 2);
  CHECK(candidates[0] == "http://e/Paris_France");
  CHECK(candidates[1] == "http://e/Paris_Texas");
}

TEST_CASE("fuzzy lookup ranks by similarity then IRI") {
  const SurfaceFormIndex& index = ts::fixture_index();
  auto matches = index.lookup_fuzzy("barline", 2);
  REQUIRE(matches.size() == 1);
  CHECK(matches[0].iri == ts::kBerlin);
  CHECK(matches[0].similarity == doctest::Approx(5.0 / 7.0));

  auto exact_only = index.lookup_fuzzy("berlin", 0);
  REQUIRE(exact_only.size() == 1);
  CHECK(exact_only[0].iri == ts::kBerlin);
  CHECK(exact_only[0].similarity == 1.0);
  CHECK(index.lookup_fuzzy("zzzzzz", 2).empty());

  KnowledgeGraph graph = two_paris_graph();
  SurfaceFormIndex paris = SurfaceFormIndex::build(graph);
  auto tied = paris.lookup_fuzzy("pari", 2);
  REQUIRE(tied.size() == 2);
  CHECK(tied[0].iri == "http://e/Paris_France");
  CHECK(tied[1].iri == "http://e/Paris_Texas");
  CHECK(tied[0].similarity == tied[1].similarity);
}

TEST_CASE("phonetic lookup matches whole-form keys") {
  const SurfaceFormIndex& index = ts::fixture_index();
  CHECK(index.lookup_phonetic("B645") ==
        std::vector<std::string>{ts::kBerlin});
  CHECK(index.lookup_phonetic(text::soundex("barline")) ==
        std::vector<std::string>{ts::kBerlin});
  CHECK(index.lookup_phonetic("X000").empty());
}

TEST_CASE("extra forms extend the index") {
  std::vector<SurfaceForm> extra =
      parse_surface_forms_tsv("BRD\thttp://dbpedia.org/resource/Germany\n"
                              "# alias file\n"
                              "Spree city\thttp://dbpedia.org/resource/Berlin\n");
  REQUIRE(extra.size() == 2);
  SurfaceFormIndex index =
      SurfaceFormIndex::build(ts::fixture_graph(), {}, extra);
  CHECK(index.lookup_exact("brd") == std::vector<std::string>{ts::kGermany});
  CHECK(index.lookup_exact("spree CITY") ==
        std::vector<std::string>{ts::kBerlin});
}

TEST_CASE("bad extra form files are rejected") {
  CHECK_THROWS_AS(parse_surface_forms_tsv("no tab here\n"), ParseError);
  CHECK_THROWS_AS(parse_surface_forms_tsv("\thttp://e/x\n"), ParseError);
  std::vector<SurfaceForm> unknown = {
      {"ghost", "http://e/missing", SurfaceForm::Origin::Extra}};
  CHECK_THROWS_AS(SurfaceFormIndex::build(ts::fixture_graph(), {}, unknown),
                  std::invalid_argument);
}

TEST_CASE("build validates its options") {
  IndexOptions no_labels;
  no_labels.label_predicates.clear();
  CHECK_THROWS_AS(SurfaceFormIndex::build(ts::fixture_graph(), no_labels),
                  std::invalid_argument);
  IndexOptions zero_span;
  zero_span.max_form_tokens = 0;
  CHECK_THROWS_AS(SurfaceFormIndex::build(ts::fixture_graph(), zero_span),
                  std::invalid_argument);
}
