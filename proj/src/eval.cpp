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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kglink {
namespace {

std::string dtos(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

double stod_strict(const std::string& field, const std::string& line) {
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::runtime_error("bad number '" + field + "' in line: " + line);
  }
  return value;
}

std::string fixed2(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", round2(value));
  return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = line.find(',', pos);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(pos));
      break;
    }
    fields.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return fields;
}

void compute_stats(const std::vector<double>& values, Histogram& histogram) {
  histogram.samples = values.size();
  if (values.empty()) {
    histogram.stats_defined = false;
    return;
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  double mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  histogram.mean = mean;
  histogram.variance = sq / static_cast<double>(values.size());
  histogram.stats_defined = true;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << body;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

Alignment align(const std::vector<std::string>& ref,
                const std::vector<std::string>& hyp) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  std::vector<std::vector<std::uint32_t>> d(n + 1,
                                            std::vector<std::uint32_t>(m + 1));
  for (std::size_t i = 0; i <= n; ++i) d[i][0] = static_cast<std::uint32_t>(i);
  for (std::size_t j = 0; j <= m; ++j) d[0][j] = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      std::uint32_t sub = d[i - 1][j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      d[i][j] = std::min({sub, d[i - 1][j] + 1, d[i][j - 1] + 1});
    }
  }

  Alignment result;
  result.reference_length = n;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] &&
        d[i][j] == d[i - 1][j - 1]) {
      result.ops.push_back({EditOp::Match, ref[i - 1], hyp[j - 1]});
      ++result.matches;
      --i;
      --j;
    } else if (i > 0 && j > 0 && d[i][j] == d[i - 1][j - 1] + 1) {
      result.ops.push_back({EditOp::Substitution, ref[i - 1], hyp[j - 1]});
      ++result.substitutions;
      --i;
      --j;
    } else if (i > 0 && d[i][j] == d[i - 1][j] + 1) {
      result.ops.push_back({EditOp::Deletion, ref[i - 1], ""});
      ++result.deletions;
      --i;
    } else {
      result.ops.push_back({EditOp::Insertion, "", hyp[j - 1]});
      ++result.insertions;
      --j;
    }
  }
  std::reverse(result.ops.begin(), result.ops.end());
  return result;
}

double wer_percent(const std::vector<Alignment>& alignments) {
  std::uint64_t errors = 0;
  std::uint64_t ref_total = 0;
  for (const Alignment& a : alignments) {
    errors += a.distance();
    ref_total += a.reference_length;
  }
  if (ref_total == 0) {
    throw std::invalid_argument(
        "word error rate needs a non-empty reference corpus");
  }
  return 100.0 * static_cast<double>(errors) / static_cast<double>(ref_total);
}

double round2(double value) { return std::nearbyint(value * 100.0) / 100.0; }

CorpusEval corpus_report(const std::string& label,
                         const std::vector<std::string>& refs,
                         const std::vector<std::string>& hyps,
                         const Annotator& annotator) {
  if (refs.size() != hyps.size()) {
    throw std::invalid_argument(
        "corpus sides differ: " + std::to_string(refs.size()) +
        " reference vs " + std::to_string(hyps.size()) +
        " hypothesis sentences");
  }
  CorpusEval out;
  out.report.test_set_label = label;
  out.report.num_sentences = refs.size();
  std::vector<Alignment> alignments;
  alignments.reserve(refs.size());
  for (std::size_t i = 0; i < refs.size(); ++i) {
    AnnotatedSentence ref_ann =
        annotator.annotate(refs[i], CandidateTier::Exact);
    AnnotatedSentence hyp_ann =
        annotator.annotate(hyps[i], CandidateTier::Exact);
    alignments.push_back(align(ref_ann.tokens, hyp_ann.tokens));
    out.report.entities_ref += ref_ann.links.size();
    out.report.entities_test += hyp_ann.links.size();
    out.entity_diffs.push_back(static_cast<std::int64_t>(ref_ann.links.size()) -
                               static_cast<std::int64_t>(hyp_ann.links.size()));
    for (const auto& [mention, link] : ref_ann.links) {
      (void)mention;
      out.pertinence_ref.push_back(link.topic_pertinence);
    }
    for (const auto& [mention, link] : hyp_ann.links) {
      (void)mention;
      out.pertinence_test.push_back(link.topic_pertinence);
    }
  }
  out.report.wer_percent = wer_percent(alignments);
  if (out.report.entities_ref > 0) {
    out.report.ratio = round2(static_cast<double>(out.report.entities_test) /
                              static_cast<double>(out.report.entities_ref));
  }
  return out;
}

Histogram entity_diff_histogram(const std::vector<std::int64_t>& diffs) {
  Histogram histogram;
  if (diffs.empty()) return histogram;
  auto [min_it, max_it] = std::minmax_element(diffs.begin(), diffs.end());
  std::int64_t low = *min_it;
  std::int64_t high = *max_it;
  std::size_t bins = static_cast<std::size_t>(high - low) + 1;
  histogram.counts.assign(bins, 0);
  histogram.bin_edges.reserve(bins + 1);
  for (std::size_t b = 0; b <= bins; ++b) {
    histogram.bin_edges.push_back(static_cast<double>(low) - 0.5 +
                                  static_cast<double>(b));
  }
  std::vector<double> values;
  values.reserve(diffs.size());
  for (std::int64_t diff : diffs) {
    ++histogram.counts[static_cast<std::size_t>(diff - low)];
    values.push_back(static_cast<double>(diff));
  }
  compute_stats(values, histogram);
  return histogram;
}

Histogram entity_diff_histogram(const std::vector<std::string>& refs,
                                const std::vector<std::string>& hyps,
                                const Annotator& annotator) {
  CorpusEval eval = corpus_report("diff", refs, hyps, annotator);
  return entity_diff_histogram(eval.entity_diffs);
}

Histogram pertinence_stats(const std::vector<double>& pertinences) {
  constexpr std::size_t kBins = 20;
  Histogram histogram;
  histogram.counts.assign(kBins, 0);
  histogram.bin_edges.reserve(kBins + 1);
  for (std::size_t b = 0; b <= kBins; ++b) {
    histogram.bin_edges.push_back(static_cast<double>(b) /
                                  static_cast<double>(kBins));
  }
  for (double value : pertinences) {
    if (value < 0.0 || value > 1.0) {
      throw std::invalid_argument("pertinence " + dtos(value) +
                                  " outside [0, 1]");
    }
    std::size_t idx = std::min(
        kBins - 1, static_cast<std::size_t>(value * static_cast<double>(kBins)));
    ++histogram.counts[idx];
  }
  compute_stats(pertinences, histogram);
  return histogram;
}

std::string report_row(const EvalReport& report) {
  std::ostringstream row;
  row << report.test_set_label << ',' << fixed2(report.wer_percent) << ','
      << report.num_sentences << ',' << report.entities_ref << ','
      << report.entities_test << ',' << fixed2(report.ratio);
  return row.str();
}

std::string histogram_csv(const Histogram& histogram) {
  std::ostringstream out;
  out << "bin_low,bin_high,count\n";
  for (std::size_t b = 0; b < histogram.counts.size(); ++b) {
    out << dtos(histogram.bin_edges[b]) << ','
        << dtos(histogram.bin_edges[b + 1]) << ',' << histogram.counts[b]
        << '\n';
  }
  if (histogram.stats_defined) {
    out << "mean," << dtos(histogram.mean) << '\n';
    out << "variance," << dtos(histogram.variance) << '\n';
  } else {
    out << "mean,undefined\n";
    out << "variance,undefined\n";
  }
  return out.str();
}

Histogram parse_histogram_csv(const std::string& text) {
  Histogram histogram;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line != "bin_low,bin_high,count") {
        throw std::runtime_error("unexpected histogram header: " + line);
      }
      continue;
    }
    std::vector<std::string> fields = split_csv(line);
    if (fields.size() == 2 && fields[0] == "mean") {
      if (fields[1] != "undefined") {
        histogram.mean = stod_strict(fields[1], line);
        histogram.stats_defined = true;
      }
      continue;
    }
    if (fields.size() == 2 && fields[0] == "variance") {
      if (fields[1] != "undefined") {
        histogram.variance = stod_strict(fields[1], line);
      }
      continue;
    }
    if (fields.size() != 3) {
      throw std::runtime_error("bad histogram row: " + line);
    }
    double low = stod_strict(fields[0], line);
    double high = stod_strict(fields[1], line);
    if (histogram.bin_edges.empty()) {
      histogram.bin_edges.push_back(low);
    } else if (histogram.bin_edges.back() != low) {
      throw std::runtime_error("histogram bins not contiguous at: " + line);
    }
    histogram.bin_edges.push_back(high);
    std::uint64_t count = 0;
    auto [ptr, ec] = std::from_chars(
        fields[2].data(), fields[2].data() + fields[2].size(), count);
    if (ec != std::errc() || ptr != fields[2].data() + fields[2].size()) {
      throw std::runtime_error("bad count in line: " + line);
    }
    histogram.counts.push_back(count);
    histogram.samples += count;
  }
  return histogram;
}

std::string histogram_svg(const Histogram& histogram,
                          const std::string& title) {
  constexpr int kWidth = 640;
  constexpr int kHeight = 360;
  constexpr int kMargin = 40;
  const int plot_w = kWidth - 2 * kMargin;
  const int plot_h = kHeight - 2 * kMargin;
  std::uint64_t max_count = 1;
  for (std::uint64_t c : histogram.counts) max_count = std::max(max_count, c);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\">\n";
  out << "  <text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\">"
      << title << "</text>\n";
  const std::size_t bins = histogram.counts.size();
  for (std::size_t b = 0; b < bins; ++b) {
    double frac = static_cast<double>(histogram.counts[b]) /
                  static_cast<double>(max_count);
    int bar_h = static_cast<int>(frac * plot_h);
    int bar_w = std::max(1, plot_w / static_cast<int>(std::max<std::size_t>(
                                        1, bins)));
    int x = kMargin + static_cast<int>(b) * bar_w;
    int y = kHeight - kMargin - bar_h;
    out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\""
        << bar_w - 1 << "\" height=\"" << bar_h << "\" fill=\"steelblue\"/>\n";
  }
  if (!histogram.bin_edges.empty()) {
    out << "  <text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin + 16
        << "\" text-anchor=\"middle\">" << dtos(histogram.bin_edges.front())
        << "</text>\n";
    out << "  <text x=\"" << kWidth - kMargin << "\" y=\""
        << kHeight - kMargin + 16 << "\" text-anchor=\"middle\">"
        << dtos(histogram.bin_edges.back()) << "</text>\n";
  }
  out << "  <text x=\"" << kMargin - 6 << "\" y=\"" << kMargin
      << "\" text-anchor=\"end\">" << max_count << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

ReportFiles emit_report(const CorpusEval& eval,
                        const std::filesystem::path& out_dir, bool svg) {
  if (eval.report.num_sentences == 0) {
    throw std::invalid_argument("refusing to report on an empty corpus");
  }
  std::filesystem::create_directories(out_dir);

  Histogram diff = entity_diff_histogram(eval.entity_diffs);
  Histogram pert_ref = pertinence_stats(eval.pertinence_ref);
  Histogram pert_test = pertinence_stats(eval.pertinence_test);

  ReportFiles files;
  files.report_csv = out_dir / "report.csv";
  files.diff_csv = out_dir / "diff_hist.csv";
  files.pertinence_ref_csv = out_dir / "pertinence_hist.csv";
  files.pertinence_test_csv = out_dir / "pertinence_hist_test.csv";

  std::string report_body =
      "test_set,wer_percent,num_sentences,entities_ref,entities_test,ratio\n" +
      report_row(eval.report) + "\n";
  write_file(files.report_csv, report_body);
  write_file(files.diff_csv, histogram_csv(diff));
  write_file(files.pertinence_ref_csv, histogram_csv(pert_ref));
  write_file(files.pertinence_test_csv, histogram_csv(pert_test));

  if (svg) {
    struct Chart {
      const Histogram* histogram;
      const char* name;
      const char* title;
    };
    const Chart charts[] = {
        {&diff, "diff_hist.svg", "Entity count difference (ref - test)"},
        {&pert_ref, "pertinence_hist.svg", "Topic pertinence (reference)"},
        {&pert_test, "pertinence_hist_test.svg", "Topic pertinence (test)"},
    };
    for (const Chart& chart : charts) {
      std::filesystem::path path = out_dir / chart.name;
      write_file(path, histogram_svg(*chart.histogram, chart.title));
      files.svgs.push_back(path);
    }
  }
  return files;
}

}  // namespace kglink
