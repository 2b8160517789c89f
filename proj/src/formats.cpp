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

#include "kglink/formats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "kglink/ntriples.hpp"
#include "kglink/text.hpp"

namespace kglink {
namespace {

using nlohmann::json;

// Strips one trailing carriage return so CRLF files parse cleanly.
std::string chomp(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::string score_to_string(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

int parse_int(const std::string& field, std::size_t line_no,
              const std::string& line) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line_no, line, "bad integer field '" + field + "'");
  }
  return value;
}

double parse_double(const std::string& field, std::size_t line_no,
                    const std::string& line) {
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line_no, line, "bad numeric field '" + field + "'");
  }
  return value;
}

json link_to_json(const Mention& mention, const ScoredLink& link) {
  json scores{{"prior", link.prior},
              {"likelihood", link.likelihood},
              {"contextualScore", link.contextual_score},
              {"support", link.support},
              {"topicPertinence", link.topic_pertinence},
              {"percentageOfSecondRank", link.percentage_of_second_rank},
              {"contextualAmbiguity", link.contextual_ambiguity},
              {"finalScore", link.final_score}};
  return json{{"start", mention.token_start},
              {"end", mention.token_end},
              {"surface", mention.surface},
              {"entity", link.entity},
              {"scores", std::move(scores)}};
}

json correction_to_json(const Correction& correction) {
  return json{
      {"tokenIndex", correction.token_index},
      {"originalWord", correction.original_word},
      {"replacement", correction.replacement},
      {"entity", correction.entity},
      {"completedTriple",
       json{{"subject", correction.completed_triple.subject},
            {"predicate", correction.completed_triple.predicate},
            {"object", serialize_term(correction.completed_triple.object)}}},
      {"similarity", correction.similarity}};
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string() + " for reading");
  }
  std::ostringstream body;
  body << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read failed for " + path.string());
  return body.str();
}

void write_file(const std::filesystem::path& path, std::string_view body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << body;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

KnowledgeGraph load_graph_file(const std::filesystem::path& path) {
  return KnowledgeGraph::load(parse_ntriples(read_file(path)));
}

std::vector<Utterance> parse_transcript(std::string_view text) {
  std::vector<Utterance> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = chomp(std::move(raw));
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw ParseError(line_no, line, "expected uttId<TAB>text");
    }
    out.push_back(Utterance{line.substr(0, tab), line.substr(tab + 1)});
  }
  return out;
}

std::string serialize_transcript(const std::vector<Utterance>& utterances) {
  std::string out;
  for (const Utterance& utt : utterances) {
    out += utt.id;
    out += '\t';
    out += utt.text;
    out += '\n';
  }
  return out;
}

std::vector<NBestList> parse_nbest(std::string_view text) {
  std::vector<NBestList> lists;
  std::vector<std::string> order;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = chomp(std::move(raw));
    if (line.empty()) continue;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    std::size_t t3 = t2 == std::string::npos ? t2 : line.find('\t', t2 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos ||
        t3 == std::string::npos || t1 == 0) {
      throw ParseError(line_no, line, "expected uttId<TAB>rank<TAB>asrScore<TAB>text");
    }
    Hypothesis hyp;
    hyp.utt_id = line.substr(0, t1);
    hyp.rank = parse_int(line.substr(t1 + 1, t2 - t1 - 1), line_no, line);
    hyp.asr_score =
        parse_double(line.substr(t2 + 1, t3 - t2 - 1), line_no, line);
    hyp.text = line.substr(t3 + 1);

    auto it = std::find(order.begin(), order.end(), hyp.utt_id);
    if (it == order.end()) {
      order.push_back(hyp.utt_id);
      lists.emplace_back();
      lists.back().hypotheses.push_back(std::move(hyp));
    } else {
      lists[static_cast<std::size_t>(it - order.begin())]
          .hypotheses.push_back(std::move(hyp));
    }
  }
  for (NBestList& list : lists) list = list.sorted();
  return lists;
}

std::string serialize_nbest(const std::vector<NBestList>& lists) {
  std::string out;
  for (const NBestList& list : lists) {
    for (const Hypothesis& hyp : list.hypotheses) {
      out += hyp.utt_id;
      out += '\t';
      out += std::to_string(hyp.rank);
      out += '\t';
      out += score_to_string(hyp.asr_score);
      out += '\t';
      out += hyp.text;
      out += '\n';
    }
  }
  return out;
}

std::vector<std::string> parse_vocab(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = chomp(std::move(raw));
    if (line.empty() || line[0] == '#') continue;
    for (auto& token : text::tokenize(line)) out.push_back(std::move(token));
  }
  return out;
}

std::string annotations_json(
    const std::vector<std::pair<std::string, AnnotatedSentence>>& items) {
  json records = json::array();
  for (const auto& [id, sentence] : items) {
    json links = json::array();
    for (const auto& [mention, link] : sentence.links) {
      links.push_back(link_to_json(mention, link));
    }
    records.push_back(json{{"id", id},
                           {"tokens", sentence.tokens},
                           {"links", std::move(links)}});
  }
  return records.dump(2) + "\n";
}

std::string rescoring_json(
    const std::vector<std::pair<std::string, std::vector<RescoredHypothesis>>>&
        items) {
  json records = json::array();
  for (const auto& [utt_id, rescored] : items) {
    json hyps = json::array();
    for (std::size_t i = 0; i < rescored.size(); ++i) {
      const RescoredHypothesis& entry = rescored[i];
      json corrections = json::array();
      for (const Correction& correction : entry.applied) {
        corrections.push_back(correction_to_json(correction));
      }
      hyps.push_back(json{{"rank", i + 1},
                          {"originalRank", entry.hypothesis.rank},
                          {"asrScore", entry.hypothesis.asr_score},
                          {"originalText", entry.hypothesis.text},
                          {"text", entry.text},
                          {"coherence", entry.coherence},
                          {"combinedScore", entry.combined_score},
                          {"corrections", std::move(corrections)}});
    }
    records.push_back(json{{"uttId", utt_id}, {"hypotheses", std::move(hyps)}});
  }
  return records.dump(2) + "\n";
}

}  // namespace kglink
