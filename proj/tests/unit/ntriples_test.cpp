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

#include "kglink/ntriples.hpp"

#include <string>
#include <vector>

#include <doctest.h>

#include "fixture.hpp"
#include "kglink/formats.hpp"
#include "support/oracles.hpp"

using namespace kglink;
namespace ts = kglink::testsupport;

TEST_CASE("parses the bundled fixture graph") {
  std::vector<Triple> triples =
      parse_ntriples(read_file(ts::data_path("fixture.nt")));
  REQUIRE(triples.size() == 7);
  CHECK(triples[0].subject == ts::kBerlin);
  CHECK(triples[0].predicate == ts::kCountry);
  CHECK(triples[0].object == Term::iri(ts::kGermany));
  CHECK(triples[2].object == Term::literal("030"));
  CHECK(triples[6].subject == ts::kMueller);
  CHECK(triples[6].object == Term::literal("Michael M\xC3\xBC"
                                           "ller"));
}

TEST_CASE("decodes literal escapes") {
  auto triples = parse_ntriples(
      "<http://e/s> <http://e/p> \"a\\\"b\\\\c\\nd\\te\\rf\" .\n");
  REQUIRE(triples.size() == 1);
  CHECK(triples[0].object.value == "a\"b\\c\nd\te\rf");
}

TEST_CASE("reads language tags and datatypes") {
  auto triples = parse_ntriples(
      "<http://e/s> <http://e/p> \"Berlin\"@de .\n"
      "<http://e/s> <http://e/p> "
      "\"42\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n");
  REQUIRE(triples.size() == 2);
  CHECK(triples[0].object.lang == "de");
  CHECK(triples[0].object.datatype == "");
  CHECK(triples[1].object.value == "42");
  CHECK(triples[1].object.datatype ==
        "http://www.w3.org/2001/XMLSchema#integer");
}

TEST_CASE("skips comments and blank lines, keeps duplicates") {
  auto triples = parse_ntriples(
      "# header\n"
      "\n"
      "<http://e/s> <http://e/p> <http://e/o> .\n"
      "<http://e/s> <http://e/p> <http://e/o> .\n");
  CHECK(triples.size() == 2);
}

TEST_CASE("rejects malformed statements with the line number") {
  auto expect_error = [](const char* doc, std::size_t line) {
    try {
      parse_ntriples(doc);
      FAIL_CHECK("no error for: " << doc);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  expect_error("_:b0 <http://e/p> <http://e/o> .\n", 1);
  expect_error("<http://e/s> <http://e/p> _:b0 .\n", 1);
  expect_error("<rel> <http://e/p> <http://e/o> .\n", 1);
  expect_error("<http://e/s> <http://e/p> <http://e/o>\n", 1);
  expect_error("<http://e/s> <http://e/p> \"open .\n", 1);
  expect_error("<http://e/s> <http://e/p> \"x\\q\" .\n", 1);
  expect_error("<http://e/s> <http://e/p> .\n", 1);
  expect_error("# fine\n<http://e/s> <http://e/p> <http://e/o> . trailing\n",
               2);
}

TEST_CASE("serialization round-trips the fixture") {
  std::string body = read_file(ts::data_path("fixture.nt"));
  std::vector<Triple> first = parse_ntriples(body);
  std::vector<Triple> second = parse_ntriples(serialize_ntriples(first));
  CHECK(first == second);
}

TEST_CASE("serialization round-trips generated documents") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    std::vector<Triple> doc = ts::random_document(seed, 60);
    std::vector<Triple> back = parse_ntriples(serialize_ntriples(doc));
    CHECK(doc == back);
  }
}
