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
#include <filesystem>
#include <string>
#include <vector>

#include "kglink/annotator.hpp"

namespace kglink {

enum class EditOp { Match, Substitution, Deletion, Insertion };

// One alignment column; the missing side of a deletion/insertion is empty.
struct AlignedPair {
  EditOp op = EditOp::Match;
  std::string ref;
  std::string hyp;
};

struct Alignment {
  std::vector<AlignedPair> ops;
  std::uint64_t matches = 0;
  std::uint64_t substitutions = 0;
  std::uint64_t deletions = 0;
  std::uint64_t insertions = 0;
  std::uint64_t reference_length = 0;

  std::uint64_t distance() const {
    return substitutions + deletions + insertions;
  }
};

// Minimal-cost alignment with unit costs. Backtrace ties prefer match,
// then substitution, then deletion, then insertion.
Alignment align(const std::vector<std::string>& ref,
                const std::vector<std::string>& hyp);

// Corpus-pooled word error rate in percent:
// 100 * (S + D + I) / total reference tokens. Throws std::invalid_argument
// when the reference corpus is empty.
double wer_percent(const std::vector<Alignment>& alignments);

struct EvalReport {
  std::string test_set_label;
  double wer_percent = 0.0;
  std::uint64_t num_sentences = 0;
  std::uint64_t entities_ref = 0;
  std::uint64_t entities_test = 0;
  // entities_test / entities_ref rounded half-to-even to 2 decimals;
  // 0 when entities_ref is 0.
  double ratio = 0.0;
};

struct Histogram {
  std::vector<double> bin_edges;
  std::vector<std::uint64_t> counts;
  std::uint64_t samples = 0;
  double mean = 0.0;
  double variance = 0.0;
  // False when there were no samples; mean and variance are then
  // meaningless.
  bool stats_defined = false;
};

// Rounds to two decimals, ties to even.
double round2(double value);

struct CorpusEval {
  EvalReport report;
  // Reference link count minus test link count, one entry per sentence.
  std::vector<std::int64_t> entity_diffs;
  std::vector<double> pertinence_ref;
  std::vector<double> pertinence_test;
};

// Annotates both corpus sides (exact candidate tier), pools the word error
// rate, and tallies link counts. refs and hyps are matched by position and
// must have equal length.
CorpusEval corpus_report(const std::string& label,
                         const std::vector<std::string>& refs,
                         const std::vector<std::string>& hyps,
                         const Annotator& annotator);

// Integer bins of width 1 centered on each value between min and max diff.
Histogram entity_diff_histogram(const std::vector<std::int64_t>& diffs);

// Sentence-level link-count differences (reference minus test), binned.
Histogram entity_diff_histogram(const std::vector<std::string>& refs,
                                const std::vector<std::string>& hyps,
                                const Annotator& annotator);

// 20 uniform bins on [0, 1] with population mean and variance. Values must
// lie in [0, 1]; 1.0 falls in the last bin.
Histogram pertinence_stats(const std::vector<double>& pertinences);

struct ReportFiles {
  std::filesystem::path report_csv;
  std::filesystem::path diff_csv;
  std::filesystem::path pertinence_ref_csv;
  std::filesystem::path pertinence_test_csv;
  std::vector<std::filesystem::path> svgs;
};

// Writes report.csv, diff_hist.csv, pertinence_hist.csv (reference side)
// and pertinence_hist_test.csv under out_dir, plus one SVG bar chart per
// histogram when requested. Throws std::runtime_error naming the path on
// I/O failure and std::invalid_argument on an empty corpus, writing
// nothing.
ReportFiles emit_report(const CorpusEval& eval,
                        const std::filesystem::path& out_dir,
                        bool svg = false);

// One CSV row:
// label,wer,sentences,entities_ref,entities_test,ratio.
std::string report_row(const EvalReport& report);

std::string histogram_csv(const Histogram& histogram);
Histogram parse_histogram_csv(const std::string& text);
std::string histogram_svg(const Histogram& histogram,
                          const std::string& title);

}  // namespace kglink
