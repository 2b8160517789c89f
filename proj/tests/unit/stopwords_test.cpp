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

#include "kglink/stopwords.hpp"

#include <doctest.h>

#include "fixture.hpp"
#include "kglink/formats.hpp"

using namespace kglink;
namespace ts = kglink::testsupport;

TEST_CASE("default list holds fifty function words") {
  StopwordSet words = StopwordSet::defaults();
  CHECK(words.size() == 50);
  CHECK(words.contains("the"));
  CHECK(words.contains("is"));
  CHECK(words.contains("of"));
  CHECK(!words.contains("berlin"));
}

TEST_CASE("the bundled stopword file mirrors the default list") {
  StopwordSet from_file =
      StopwordSet::from_text(read_file(ts::data_path("stopwords.txt")));
  StopwordSet defaults = StopwordSet::defaults();
  CHECK(from_file.size() == defaults.size());
  CHECK(from_file.contains("were"));
  CHECK(from_file.contains("a"));
}

TEST_CASE("from_text skips comments and normalizes entries") {
  StopwordSet words = StopwordSet::from_text("# comment\nThe\n\nOF!\n");
  CHECK(words.size() == 2);
  CHECK(words.contains("the"));
  CHECK(words.contains("of"));
}
