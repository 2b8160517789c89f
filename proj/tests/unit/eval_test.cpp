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

#include "kglink/eval.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

#include "fixture.hpp"
#include "kglink/formats.hpp"
#include "kglink/text.hpp"
#include "support/oracles.hpp"

using namespace kglink;
namespace ts = kglink::testsupport;
namespace fs = std::filesystem;

TEST_CASE("alignment classifies every edit") {
  auto ref = text::tokenize("berlin is the capital of germany");
  auto hyp = text::tokenize("barline is capital of germany now");
  Alignment alignment = align(ref, hyp);
  CHECK(alignment.substitutions == 1);
  CHECK(alignment.deletions == 1);
  CHECK(alignment.insertions == 1);
  CHECK(alignment.matches == 4);
  CHECK(alignment.distance() == 3);
  CHECK(alignment.reference_length == 6);
  REQUIRE(alignment.ops.size() == 7);
  CHECK(alignment.ops[0].op == EditOp::Substitution);
  CHECK(alignment.ops[0].hyp == "barline");
  CHECK(alignment.ops[2].op == EditOp::Deletion);
  CHECK(alignment.ops[2].ref == "the");
  CHECK(alignment.ops[6].op == EditOp::Insertion);
  CHECK(alignment.ops[6].hyp == "now");
}

TEST_CASE("alignment edge cases") {
  Alignment identical = align({"a", "b"}, {"a", "b"});
  CHECK(identical.distance() == 0);
  CHECK(identical.matches == 2);

  Alignment sub = align({"a"}, {"b"});
  REQUIRE(sub.ops.size() == 1);
  CHECK(sub.ops[0].op == EditOp::Substitution);

  Alignment del = align({"a", "b"}, {"b"});
  REQUIRE(del.ops.size() == 2);
  CHECK(del.ops[0].op == EditOp::Deletion);
  CHECK(del.ops[1].op == EditOp::Match);

  Alignment ins = align({}, {"x"});
  CHECK(ins.insertions == 1);
  CHECK(ins.reference_length == 0);
}

TEST_CASE("alignment cost matches the reference edit distance") {
  using V = std::vector<std::string>;
  const std::vector<std::pair<V, V>> pairs = {
      {{"a", "b", "c", "d"}, {"b", "c", "d", "a"}},
      {{"x", "x", "y"}, {"y", "x", "x"}},
      {{}, {}},
      {{"one"}, {"one", "two", "three"}},
  };
  for (const auto& [ref, hyp] : pairs) {
    Alignment alignment = align(ref, hyp);
    CHECK(alignment.distance() == testsupport::edit_distance_memo(ref, hyp));
    CHECK(alignment.matches + alignment.substitutions + alignment.deletions ==
          ref.size());
    CHECK(alignment.matches + alignment.substitutions +
              alignment.insertions ==
          hyp.size());
  }
}

TEST_CASE("word error rate pools errors over the whole corpus") {
  auto ref1 = text::tokenize("berlin is the capital of germany");
  auto hyp1 = text::tokenize("barline is the capital of germany");
  CHECK(wer_percent({align(ref1, hyp1)}) == doctest::Approx(100.0 / 6.0));

  std::vector<Alignment> pooled = {
      align(ref1, hyp1),
      align({"a", "b", "c", "d"}, {"a", "x", "y", "d"}),
  };
  CHECK(wer_percent(pooled) == doctest::Approx(30.0));

  CHECK(wer_percent({align({"a"}, {"a"})}) == 0.0);
  CHECK_THROWS_AS(wer_percent({}), std::invalid_argument);
  CHECK_THROWS_AS(wer_percent({align({}, {"x"})}), std::invalid_argument);
}

TEST_CASE("round2 rounds half to even") {
  CHECK(round2(1.125) == doctest::Approx(1.12));
  CHECK(round2(1.375) == doctest::Approx(1.38));
  CHECK(round2(0.625) == doctest::Approx(0.62));
  CHECK(round2(0.875) == doctest::Approx(0.88));
  CHECK(round2(1836.0 / 1802.0) == doctest::Approx(1.02));
  CHECK(round2(6743.0 / 5804.0) == doctest::Approx(1.16));
  CHECK(round2(1139.0 / 1129.0) == doctest::Approx(1.01));
  CHECK(round2(2.0 / 3.0) == doctest::Approx(0.67));
}

TEST_CASE("corpus_report annotates both sides and tallies links") {
  const Annotator& annotator = ts::fixture_annotator();
  std::vector<std::string> refs = {"berlin is the capital of germany"};
  std::vector<std::string> hyps = {"barline is the capital of germany"};
  CorpusEval eval = corpus_report("Fixture", refs, hyps, annotator);

  CHECK(eval.report.test_set_label == "Fixture");
  CHECK(eval.report.num_sentences == 1);
  CHECK(eval.report.entities_ref == 3);
  CHECK(eval.report.entities_test == 2);
  CHECK(eval.report.ratio == doctest::Approx(0.67));
  CHECK(eval.report.wer_percent == doctest::Approx(100.0 / 6.0));
  CHECK(eval.entity_diffs == std::vector<std::int64_t>{1});
  CHECK(eval.pertinence_ref.size() == 3);
  CHECK(eval.pertinence_test.size() == 2);

  CHECK_THROWS_AS(corpus_report("bad", refs, {}, annotator),
                  std::invalid_argument);
}

TEST_CASE("corpus_report handles error-free corpora") {
  const Annotator& annotator = ts::fixture_annotator();
  std::vector<std::string> refs = {"michael m\xC3\xBC"
                                   "ller leads berlin"};
  CorpusEval eval = corpus_report("Clean", refs, refs, annotator);
  CHECK(eval.report.wer_percent == 0.0);
  CHECK(eval.report.entities_ref == 2);
  CHECK(eval.report.ratio == doctest::Approx(1.0));
  CHECK(eval.entity_diffs == std::vector<std::int64_t>{0});
}

TEST_CASE("entity difference histogram uses unit bins around each value") {
  Histogram histogram = entity_diff_histogram({-2, 0, 0, 1});
  REQUIRE(histogram.counts.size() == 4);
  CHECK(histogram.counts == std::vector<std::uint64_t>{1, 0, 2, 1});
  REQUIRE(histogram.bin_edges.size() == 5);
  CHECK(histogram.bin_edges.front() == doctest::Approx(-2.5));
  CHECK(histogram.bin_edges.back() == doctest::Approx(1.5));
  CHECK(histogram.samples == 4);
  CHECK(histogram.stats_defined);
  CHECK(histogram.mean == doctest::Approx(-0.25));
  CHECK(histogram.variance == doctest::Approx(1.1875));

  Histogram empty = entity_diff_histogram(std::vector<std::int64_t>{});
  CHECK(empty.counts.empty());
  CHECK(!empty.stats_defined);
}

TEST_CASE("pertinence histogram buckets twenty uniform bins") {
  Histogram histogram = pertinence_stats({0.2, 0.8});
  REQUIRE(histogram.counts.size() == 20);
  CHECK(histogram.counts[4] == 1);
  CHECK(histogram.counts[16] == 1);
  CHECK(histogram.samples == 2);
  CHECK(histogram.mean == doctest::Approx(0.5));
  CHECK(histogram.variance == doctest::Approx(0.09));

  Histogram edges = pertinence_stats({0.0, 1.0});
  CHECK(edges.counts[0] == 1);
  CHECK(edges.counts[19] == 1);

  Histogram none = pertinence_stats({});
  CHECK(none.samples == 0);
  CHECK(!none.stats_defined);

  CHECK_THROWS_AS(pertinence_stats({1.5}), std::invalid_argument);
  CHECK_THROWS_AS(pertinence_stats({-0.1}), std::invalid_argument);
}

TEST_CASE("report rows print fixed two-decimal columns") {
  EvalReport report{"Tedlium", 31.85, 1155, 5804, 6743, 1.16};
  CHECK(report_row(report) == "Tedlium,31.85,1155,5804,6743,1.16");

  EvalReport padded{"Dev", 10.0, 2, 5, 4, 0.8};
  CHECK(report_row(padded) == "Dev,10.00,2,5,4,0.80");
}

TEST_CASE("histogram CSV round-trips") {
  Histogram histogram = entity_diff_histogram({-2, 0, 0, 1});
  std::string csv = histogram_csv(histogram);
  CHECK(csv.rfind("bin_low,bin_high,count\n", 0) == 0);
  CHECK(csv.find("mean,-0.25\n") != std::string::npos);

  Histogram parsed = parse_histogram_csv(csv);
  CHECK(parsed.counts == histogram.counts);
  CHECK(parsed.samples == histogram.samples);
  REQUIRE(parsed.bin_edges.size() == histogram.bin_edges.size());
  for (std::size_t i = 0; i < parsed.bin_edges.size(); ++i) {
    CHECK(parsed.bin_edges[i] == doctest::Approx(histogram.bin_edges[i]));
  }
  CHECK(parsed.stats_defined);
  CHECK(parsed.mean == doctest::Approx(histogram.mean));
  CHECK(parsed.variance == doctest::Approx(histogram.variance));

  std::string undefined_csv = histogram_csv(pertinence_stats({}));
  CHECK(undefined_csv.find("mean,undefined\n") != std::string::npos);
  CHECK(!parse_histogram_csv(undefined_csv).stats_defined);

  CHECK_THROWS_AS(parse_histogram_csv("wrong,header\n"), std::runtime_error);
  CHECK_THROWS_AS(
      parse_histogram_csv("bin_low,bin_high,count\n0,1,2\n5,6,1\n"),
      std::runtime_error);
}

TEST_CASE("emit_report writes the full file set") {
  const Annotator& annotator = ts::fixture_annotator();
  CorpusEval eval =
      corpus_report("Fixture", {"berlin is the capital of germany"},
                    {"barline is the capital of germany"}, annotator);

  fs::path dir = fs::temp_directory_path() / "kglink_eval_test";
  fs::remove_all(dir);
  ReportFiles files = emit_report(eval, dir, true);

  CHECK(fs::exists(files.report_csv));
  CHECK(fs::exists(files.diff_csv));
  CHECK(fs::exists(files.pertinence_ref_csv));
  CHECK(fs::exists(files.pertinence_test_csv));
  REQUIRE(files.svgs.size() == 3);
  for (const fs::path& svg : files.svgs) {
    CHECK(fs::exists(svg));
    CHECK(read_file(svg).find("<svg") == 0);
  }

  std::string report = read_file(files.report_csv);
  CHECK(report ==
        "test_set,wer_percent,num_sentences,entities_ref,entities_test,"
        "ratio\nFixture,16.67,1,3,2,0.67\n");

  Histogram diff = parse_histogram_csv(read_file(files.diff_csv));
  CHECK(diff.samples == 1);
  Histogram pert = parse_histogram_csv(read_file(files.pertinence_ref_csv));
  CHECK(pert.samples == 3);
  fs::remove_all(dir);

  CorpusEval empty;
  CHECK_THROWS_AS(emit_report(empty, dir), std::invalid_argument);
  CHECK(!fs::exists(dir / "report.csv"));
}

TEST_CASE("svg charts draw one bar per bin") {
  Histogram histogram = entity_diff_histogram({0, 0, 1});
  std::string svg = histogram_svg(histogram, "diffs");
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("diffs") != std::string::npos);
  std::size_t bars = 0;
  for (std::size_t pos = svg.find("<rect"); pos != std::string::npos;
       pos = svg.find("<rect", pos + 1)) {
    ++bars;
  }
  CHECK(bars == histogram.counts.size());
  CHECK(svg.find("steelblue") != std::string::npos);
}
