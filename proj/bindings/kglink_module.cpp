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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "kglink/annotator.hpp"
#include "kglink/corrector.hpp"
#include "kglink/eval.hpp"
#include "kglink/formats.hpp"
#include "kglink/ntriples.hpp"
#include "kglink/simulator.hpp"
#include "kglink/stopwords.hpp"
#include "kglink/surface_index.hpp"
#include "kglink/text.hpp"

namespace py = pybind11;

namespace {

using namespace kglink;

// Owns the graph, index, stopwords and annotator together so Python users
// get one handle with stable lifetimes.
class Linker {
 public:
  Linker(const std::string& graph_path, const std::string& stopwords_path,
         std::vector<std::string> label_predicates,
         std::vector<double> weights, bool fuzzy, int fuzzy_max_dist,
         int max_form_tokens, const std::string& forms_path) {
    if (weights.size() != 3) {
      throw std::invalid_argument("weights must hold exactly 3 values");
    }
    graph_ = load_graph_file(graph_path);

    IndexOptions index_options;
    index_options.label_predicates = label_predicates;
    index_options.max_form_tokens = max_form_tokens;
    std::vector<SurfaceForm> extra;
    if (!forms_path.empty()) {
      extra = parse_surface_forms_tsv(read_file(forms_path));
    }
    index_ = SurfaceFormIndex::build(graph_, index_options, extra);

    StopwordSet stopwords =
        stopwords_path.empty()
            ? StopwordSet::defaults()
            : StopwordSet::from_text(read_file(stopwords_path));

    AnnotatorOptions options;
    options.label_predicates = std::move(label_predicates);
    options.weights = ScoreWeights{weights[0], weights[1], weights[2]};
    options.fuzzy_fallback = fuzzy;
    options.fuzzy_max_dist = fuzzy_max_dist;
    annotator_.emplace(graph_, index_, std::move(stopwords), options);
  }

  Linker(const Linker&) = delete;
  Linker& operator=(const Linker&) = delete;

  const KnowledgeGraph& graph() const { return graph_; }
  const Annotator& annotator() const { return *annotator_; }

  AnnotatedSentence annotate(const std::string& sentence) const {
    return annotator_->annotate(sentence);
  }

  std::uint64_t coherence_of(const std::string& sentence) const {
    return coherence(annotator_->annotate(sentence), graph_);
  }

  std::vector<Correction> propose(const std::string& sentence,
                                  double min_similarity) const {
    return propose_corrections(annotator_->annotate(sentence), *annotator_,
                               min_similarity);
  }

  std::vector<RescoredHypothesis> rescore_list(const NBestList& nbest,
                                               double lambda,
                                               double min_similarity) const {
    CorrectorOptions options;
    options.lambda = lambda;
    options.min_similarity = min_similarity;
    return rescore(nbest, *annotator_, options);
  }

  CorpusEval evaluate(const std::string& label,
                      const std::vector<std::string>& refs,
                      const std::vector<std::string>& hyps) const {
    return corpus_report(label, refs, hyps, *annotator_);
  }

  std::vector<std::string> lookup(const std::string& surface) const {
    return index_.lookup_exact(surface);
  }

  std::vector<FuzzyMatch> lookup_fuzzy(const std::string& surface,
                                       int max_dist) const {
    return index_.lookup_fuzzy(surface, max_dist);
  }

  double prior(const std::string& iri) const { return annotator_->prior(iri); }

 private:
  KnowledgeGraph graph_;
  SurfaceFormIndex index_;
  std::optional<Annotator> annotator_;
};

std::string term_to_string(const Term& term) { return serialize_term(term); }

}  // namespace

PYBIND11_MODULE(kglink, m) {
  m.doc() =
      "Entity linking of transcripts against a knowledge graph, with "
      "coherence-based recognition-error correction and evaluation tools";

  m.def("normalize", &text::normalize, py::arg("text"));
  m.def("tokenize", &text::tokenize, py::arg("text"));
  m.def("soundex", &text::soundex, py::arg("token"));
  m.def(
      "levenshtein",
      [](const std::string& a, const std::string& b) {
        return text::levenshtein(a, b);
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "similarity",
      [](const std::string& a, const std::string& b) {
        return text::similarity(a, b);
      },
      py::arg("a"), py::arg("b"));

  py::class_<Triple>(m, "Triple")
      .def_readonly("subject", &Triple::subject)
      .def_readonly("predicate", &Triple::predicate)
      .def_property_readonly(
          "object", [](const Triple& t) { return term_to_string(t.object); })
      .def("__repr__", [](const Triple& t) {
        return "<Triple " + t.subject + " " + t.predicate + " " +
               term_to_string(t.object) + ">";
      });

  py::class_<KnowledgeGraph>(m, "KnowledgeGraph")
      .def_static(
          "load",
          [](const std::string& path) { return load_graph_file(path); },
          py::arg("path"))
      .def_static(
          "from_text",
          [](const std::string& text) {
            return KnowledgeGraph::load(parse_ntriples(text));
          },
          py::arg("text"))
      .def("__len__", &KnowledgeGraph::size)
      .def("support", &KnowledgeGraph::support, py::arg("iri"))
      .def_property_readonly("total_support", &KnowledgeGraph::total_support)
      .def_property_readonly("entities", &KnowledgeGraph::entities)
      .def("has_entity", &KnowledgeGraph::has_entity, py::arg("iri"))
      .def("is_predicate", &KnowledgeGraph::is_predicate, py::arg("iri"))
      .def("describe", &KnowledgeGraph::describe, py::arg("entity"))
      .def("connecting", &KnowledgeGraph::connecting, py::arg("e1"),
           py::arg("e2"));

  py::class_<Mention>(m, "Mention")
      .def_readonly("start", &Mention::token_start)
      .def_readonly("end", &Mention::token_end)
      .def_readonly("surface", &Mention::surface);

  py::class_<ScoredLink>(m, "ScoredLink")
      .def_readonly("entity", &ScoredLink::entity)
      .def_readonly("prior", &ScoredLink::prior)
      .def_readonly("likelihood", &ScoredLink::likelihood)
      .def_readonly("contextual_score", &ScoredLink::contextual_score)
      .def_readonly("support", &ScoredLink::support)
      .def_readonly("topic_pertinence", &ScoredLink::topic_pertinence)
      .def_readonly("percentage_of_second_rank",
                    &ScoredLink::percentage_of_second_rank)
      .def_readonly("contextual_ambiguity", &ScoredLink::contextual_ambiguity)
      .def_readonly("final_score", &ScoredLink::final_score)
      .def("__repr__", [](const ScoredLink& link) {
        return "<ScoredLink " + link.entity + ">";
      });

  py::class_<AnnotatedSentence>(m, "AnnotatedSentence")
      .def_readonly("tokens", &AnnotatedSentence::tokens)
      .def_readonly("links", &AnnotatedSentence::links);

  py::class_<FuzzyMatch>(m, "FuzzyMatch")
      .def_readonly("iri", &FuzzyMatch::iri)
      .def_readonly("similarity", &FuzzyMatch::similarity);

  py::class_<Hypothesis>(m, "Hypothesis")
      .def(py::init([](const std::string& utt_id, int rank, double asr_score,
                       const std::string& text) {
             return Hypothesis{utt_id, rank, asr_score, text};
           }),
           py::arg("utt_id"), py::arg("rank"), py::arg("asr_score"),
           py::arg("text"))
      .def_readonly("utt_id", &Hypothesis::utt_id)
      .def_readonly("rank", &Hypothesis::rank)
      .def_readonly("asr_score", &Hypothesis::asr_score)
      .def_readonly("text", &Hypothesis::text);

  py::class_<NBestList>(m, "NBestList")
      .def(py::init([](std::vector<Hypothesis> hypotheses) {
             NBestList list;
             list.hypotheses = std::move(hypotheses);
             list.validate();
             return list;
           }),
           py::arg("hypotheses"))
      .def_readonly("hypotheses", &NBestList::hypotheses)
      .def_property_readonly("utt_id", [](const NBestList& list) {
        return list.utt_id();
      });

  py::class_<Correction>(m, "Correction")
      .def_readonly("token_index", &Correction::token_index)
      .def_readonly("original_word", &Correction::original_word)
      .def_readonly("replacement", &Correction::replacement)
      .def_readonly("entity", &Correction::entity)
      .def_readonly("completed_triple", &Correction::completed_triple)
      .def_readonly("similarity", &Correction::similarity)
      .def("__repr__", [](const Correction& c) {
        return "<Correction " + c.original_word + " -> " + c.replacement +
               ">";
      });

  py::class_<RescoredHypothesis>(m, "RescoredHypothesis")
      .def_readonly("hypothesis", &RescoredHypothesis::hypothesis)
      .def_readonly("text", &RescoredHypothesis::text)
      .def_readonly("applied", &RescoredHypothesis::applied)
      .def_readonly("coherence", &RescoredHypothesis::coherence)
      .def_readonly("combined_score", &RescoredHypothesis::combined_score);

  py::class_<EvalReport>(m, "EvalReport")
      .def_readonly("test_set_label", &EvalReport::test_set_label)
      .def_readonly("wer_percent", &EvalReport::wer_percent)
      .def_readonly("num_sentences", &EvalReport::num_sentences)
      .def_readonly("entities_ref", &EvalReport::entities_ref)
      .def_readonly("entities_test", &EvalReport::entities_test)
      .def_readonly("ratio", &EvalReport::ratio);

  py::class_<CorpusEval>(m, "CorpusEval")
      .def_readonly("report", &CorpusEval::report)
      .def_readonly("entity_diffs", &CorpusEval::entity_diffs)
      .def_readonly("pertinence_ref", &CorpusEval::pertinence_ref)
      .def_readonly("pertinence_test", &CorpusEval::pertinence_test)
      .def(
          "emit",
          [](const CorpusEval& eval, const std::string& out_dir, bool svg) {
            emit_report(eval, out_dir, svg);
          },
          py::arg("out_dir"), py::arg("svg") = false);

  py::class_<Linker>(m, "Linker")
      .def(py::init<const std::string&, const std::string&,
                    std::vector<std::string>, std::vector<double>, bool, int,
                    int, const std::string&>(),
           py::arg("graph_path"), py::arg("stopwords_path") = "",
           py::arg("label_predicates") =
               std::vector<std::string>{std::string(kRdfsLabel)},
           py::arg("weights") = std::vector<double>{1.0, 1.0, 1.0},
           py::arg("fuzzy") = false, py::arg("fuzzy_max_dist") = 2,
           py::arg("max_form_tokens") = 3, py::arg("forms_path") = "")
      .def_property_readonly("graph", &Linker::graph,
                             py::return_value_policy::reference_internal)
      .def("annotate", &Linker::annotate, py::arg("sentence"))
      .def("coherence", &Linker::coherence_of, py::arg("sentence"))
      .def("propose_corrections", &Linker::propose, py::arg("sentence"),
           py::arg("min_similarity") = 0.6)
      .def("rescore", &Linker::rescore_list, py::arg("nbest"),
           py::arg("lambda_") = 0.5, py::arg("min_similarity") = 0.6)
      .def("evaluate", &Linker::evaluate, py::arg("label"), py::arg("refs"),
           py::arg("hyps"))
      .def("lookup", &Linker::lookup, py::arg("surface"))
      .def("lookup_fuzzy", &Linker::lookup_fuzzy, py::arg("surface"),
           py::arg("max_dist") = 2)
      .def("prior", &Linker::prior, py::arg("iri"));

  m.def(
      "corrupt",
      [](const std::vector<std::string>& tokens, double p_sub, double p_del,
         double p_ins, const std::vector<std::string>& vocabulary,
         std::uint64_t seed) {
        ErrorModel model(p_sub, p_del, p_ins, vocabulary, seed);
        return corrupt(tokens, model);
      },
      py::arg("tokens"), py::arg("p_sub"), py::arg("p_del"), py::arg("p_ins"),
      py::arg("vocabulary"), py::arg("seed") = 0);
  m.def(
      "generate_nbest",
      [](const std::string& utt_id, const std::vector<std::string>& reference,
         double p_sub, double p_del, double p_ins,
         const std::vector<std::string>& vocabulary, std::uint64_t seed,
         int n) {
        ErrorModel model(p_sub, p_del, p_ins, vocabulary, seed);
        return generate_nbest(utt_id, reference, model, n);
      },
      py::arg("utt_id"), py::arg("reference"), py::arg("p_sub"),
      py::arg("p_del"), py::arg("p_ins"), py::arg("vocabulary"),
      py::arg("seed") = 0, py::arg("n") = 1);

  py::class_<Alignment>(m, "Alignment")
      .def_readonly("matches", &Alignment::matches)
      .def_readonly("substitutions", &Alignment::substitutions)
      .def_readonly("deletions", &Alignment::deletions)
      .def_readonly("insertions", &Alignment::insertions)
      .def_readonly("reference_length", &Alignment::reference_length)
      .def_property_readonly("distance", &Alignment::distance);

  m.def("align", &align, py::arg("ref"), py::arg("hyp"));
  m.def(
      "wer",
      [](const std::vector<std::vector<std::string>>& refs,
         const std::vector<std::vector<std::string>>& hyps) {
        if (refs.size() != hyps.size()) {
          throw std::invalid_argument(
              "refs and hyps must have equal length");
        }
        std::vector<Alignment> alignments;
        alignments.reserve(refs.size());
        for (std::size_t i = 0; i < refs.size(); ++i) {
          alignments.push_back(align(refs[i], hyps[i]));
        }
        return wer_percent(alignments);
      },
      py::arg("refs"), py::arg("hyps"));
}
