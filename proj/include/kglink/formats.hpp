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

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kglink/annotator.hpp"
#include "kglink/corrector.hpp"
#include "kglink/graph.hpp"

namespace kglink {

struct Utterance {
  std::string id;
  std::string text;

  friend bool operator==(const Utterance&, const Utterance&) = default;
};

// Whole-file helpers; errors carry the path.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view body);

// Parses a graph file and builds the triple store.
KnowledgeGraph load_graph_file(const std::filesystem::path& path);

// Transcript lines are `uttId<TAB>text`. Blank lines are skipped; lines
// are data, never comments.
std::vector<Utterance> parse_transcript(std::string_view text);
std::string serialize_transcript(const std::vector<Utterance>& utterances);

// N-best lines are `uttId<TAB>rank<TAB>asrScore<TAB>text`, grouped by
// utterance id in first-appearance order; each group is validated and
// sorted by rank.
std::vector<NBestList> parse_nbest(std::string_view text);
std::string serialize_nbest(const std::vector<NBestList>& lists);

// One word per line; blank lines and lines starting with '#' are skipped.
// Entries are normalized; multi-token lines contribute each token.
std::vector<std::string> parse_vocab(std::string_view text);

// JSON array with one record per sentence: id, tokens, and links with
// span, surface, entity and the eight scores. Field names are fixed by
// docs/annotation.schema.json.
std::string annotations_json(
    const std::vector<std::pair<std::string, AnnotatedSentence>>& items);

// JSON log of a rescoring run: per utterance the reranked hypotheses with
// original rank, scores, coherence and applied corrections.
std::string rescoring_json(
    const std::vector<std::pair<std::string, std::vector<RescoredHypothesis>>>&
        items);

}  // namespace kglink
