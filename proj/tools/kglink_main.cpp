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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>

#include "kglink/annotator.hpp"
#include "kglink/corrector.hpp"
#include "kglink/eval.hpp"
#include "kglink/formats.hpp"
#include "kglink/ntriples.hpp"
#include "kglink/simulator.hpp"
#include "kglink/stopwords.hpp"
#include "kglink/surface_index.hpp"
#include "kglink/text.hpp"

namespace {

using namespace kglink;

// Distance between the per-utterance seeds of one simulate run.
constexpr std::uint64_t kUtteranceSeedStride = 1000003;

struct AnnotatorConfig {
  std::string graph_path;
  std::string stopwords_path;
  std::string forms_path;
  std::vector<std::string> label_predicates{std::string(kRdfsLabel)};
  std::vector<double> weights{1.0, 1.0, 1.0};
  bool fuzzy = false;
  int fuzzy_max_dist = 2;
};

// Owns the graph/index/stopwords an Annotator borrows.
struct Pipeline {
  KnowledgeGraph graph;
  SurfaceFormIndex index;
  std::optional<Annotator> annotator;
};

void add_annotator_options(CLI::App* sub, AnnotatorConfig& config,
                           bool with_fuzzy) {
  sub->add_option("--graph", config.graph_path, "Knowledge graph (N-Triples)")
      ->required()
      ->envname("KGLINK_GRAPH")
      ->check(CLI::ExistingFile);
  sub->add_option("--stopwords", config.stopwords_path,
                  "Stopword list, one word per line (built-in default)")
      ->check(CLI::ExistingFile);
  sub->add_option("--forms", config.forms_path,
                  "Extra surface forms, surface<TAB>iri per line")
      ->check(CLI::ExistingFile);
  sub->add_option("--labels", config.label_predicates,
                  "Label predicate IRIs (default rdfs:label)");
  sub->add_option("--weights", config.weights,
                  "Score weights prior,likelihood,contextual")
      ->delimiter(',')
      ->expected(3);
  if (with_fuzzy) {
    sub->add_flag("--fuzzy", config.fuzzy,
                  "Fuzzy candidate fallback for unlinked tokens");
    sub->add_option("--fuzzy-max-dist", config.fuzzy_max_dist,
                    "Edit distance bound for fuzzy lookup")
        ->check(CLI::NonNegativeNumber);
  }
}

Pipeline build_pipeline(const AnnotatorConfig& config) {
  Pipeline pipeline;
  pipeline.graph = load_graph_file(config.graph_path);

  IndexOptions index_options;
  index_options.label_predicates = config.label_predicates;
  std::vector<SurfaceForm> extra;
  if (!config.forms_path.empty()) {
    extra = parse_surface_forms_tsv(read_file(config.forms_path));
  }
  pipeline.index =
      SurfaceFormIndex::build(pipeline.graph, index_options, extra);

  StopwordSet stopwords =
      config.stopwords_path.empty()
          ? StopwordSet::defaults()
          : StopwordSet::from_text(read_file(config.stopwords_path));

  AnnotatorOptions options;
  options.label_predicates = config.label_predicates;
  options.weights = ScoreWeights{config.weights[0], config.weights[1],
                                 config.weights[2]};
  options.fuzzy_fallback = config.fuzzy;
  options.fuzzy_max_dist = config.fuzzy_max_dist;
  pipeline.annotator.emplace(pipeline.graph, pipeline.index,
                             std::move(stopwords), options);
  return pipeline;
}

void emit(const std::string& out_path, const std::string& body) {
  if (out_path.empty()) {
    std::cout << body;
  } else {
    write_file(out_path, body);
  }
}

int run_annotate(const AnnotatorConfig& config, const std::string& text,
                 bool have_text, const std::string& input_path,
                 const std::string& out_path) {
  Pipeline pipeline = build_pipeline(config);
  std::vector<std::pair<std::string, AnnotatedSentence>> items;
  if (have_text) {
    items.emplace_back("text", pipeline.annotator->annotate(text));
  } else {
    for (const Utterance& utt : parse_transcript(read_file(input_path))) {
      items.emplace_back(utt.id, pipeline.annotator->annotate(utt.text));
    }
  }
  emit(out_path, annotations_json(items));
  return 0;
}

int run_correct(const AnnotatorConfig& config, const std::string& nbest_path,
                const std::string& out_path, double lambda,
                double min_similarity) {
  Pipeline pipeline = build_pipeline(config);
  CorrectorOptions options;
  options.lambda = lambda;
  options.min_similarity = min_similarity;

  std::vector<NBestList> lists = parse_nbest(read_file(nbest_path));
  std::vector<NBestList> reranked;
  std::vector<std::pair<std::string, std::vector<RescoredHypothesis>>> log;
  for (const NBestList& list : lists) {
    std::vector<RescoredHypothesis> rescored =
        rescore(list, *pipeline.annotator, options);
    NBestList out_list;
    for (std::size_t i = 0; i < rescored.size(); ++i) {
      Hypothesis hyp;
      hyp.utt_id = rescored[i].hypothesis.utt_id;
      hyp.rank = static_cast<int>(i) + 1;
      hyp.asr_score = rescored[i].combined_score;
      hyp.text = rescored[i].text;
      out_list.hypotheses.push_back(std::move(hyp));
    }
    reranked.push_back(std::move(out_list));
    log.emplace_back(list.utt_id(), std::move(rescored));
  }
  write_file(out_path, serialize_nbest(reranked));
  write_file(out_path + ".corrections.json", rescoring_json(log));
  return 0;
}

int run_simulate(const std::string& ref_path, double wer, double p_sub,
                 double p_del, double p_ins, bool split_wer, int n,
                 std::uint64_t seed, const std::string& vocab_path,
                 const std::string& out_path) {
  std::vector<Utterance> refs = parse_transcript(read_file(ref_path));

  std::vector<std::string> vocabulary;
  if (!vocab_path.empty()) {
    vocabulary = parse_vocab(read_file(vocab_path));
  } else {
    for (const Utterance& utt : refs) {
      for (auto& token : text::tokenize(utt.text)) {
        vocabulary.push_back(std::move(token));
      }
    }
  }
  if (split_wer) {
    p_sub = p_del = p_ins = wer / 3.0;
  }
  ErrorModel model(p_sub, p_del, p_ins, std::move(vocabulary), seed);

  std::vector<NBestList> lists;
  lists.reserve(refs.size());
  for (std::size_t i = 0; i < refs.size(); ++i) {
    std::vector<std::string> tokens = text::tokenize(refs[i].text);
    ErrorModel utt_model =
        model.with_seed(seed + kUtteranceSeedStride * static_cast<std::uint64_t>(i));
    lists.push_back(generate_nbest(refs[i].id, tokens, utt_model, n));
  }

  if (n == 1) {
    std::vector<Utterance> out;
    out.reserve(lists.size());
    for (const NBestList& list : lists) {
      out.push_back(Utterance{list.utt_id(), list.hypotheses.front().text});
    }
    write_file(out_path, serialize_transcript(out));
  } else {
    write_file(out_path, serialize_nbest(lists));
  }
  return 0;
}

int run_evaluate(const AnnotatorConfig& config, const std::string& ref_path,
                 const std::string& hyp_path, const std::string& label,
                 const std::string& out_dir, bool svg) {
  Pipeline pipeline = build_pipeline(config);
  std::vector<Utterance> refs = parse_transcript(read_file(ref_path));
  std::vector<Utterance> hyps = parse_transcript(read_file(hyp_path));

  std::unordered_map<std::string, std::string> hyp_by_id;
  for (const Utterance& utt : hyps) {
    if (!hyp_by_id.emplace(utt.id, utt.text).second) {
      throw std::runtime_error("duplicate hypothesis utterance id " + utt.id);
    }
  }
  if (refs.size() != hyps.size()) {
    throw std::runtime_error(
        "utterance sets differ: " + std::to_string(refs.size()) +
        " reference vs " + std::to_string(hyps.size()) + " hypothesis ids");
  }
  std::vector<std::string> ref_texts;
  std::vector<std::string> hyp_texts;
  for (const Utterance& utt : refs) {
    auto it = hyp_by_id.find(utt.id);
    if (it == hyp_by_id.end()) {
      throw std::runtime_error("utterance " + utt.id +
                               " missing from hypothesis file");
    }
    ref_texts.push_back(utt.text);
    hyp_texts.push_back(it->second);
  }

  CorpusEval eval =
      corpus_report(label, ref_texts, hyp_texts, *pipeline.annotator);
  emit_report(eval, out_dir, svg);
  std::cout << report_row(eval.report) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Links transcript text to knowledge-graph entities, repairs "
      "recognition errors via graph coherence, and measures their impact"};
  app.require_subcommand(1);

  AnnotatorConfig annotate_config;
  std::string annotate_text;
  std::string annotate_input;
  std::string annotate_out;
  CLI::App* annotate_cmd =
      app.add_subcommand("annotate", "Annotate sentences with entity links");
  add_annotator_options(annotate_cmd, annotate_config, /*with_fuzzy=*/true);
  CLI::Option* text_opt =
      annotate_cmd->add_option("--text", annotate_text, "One sentence to annotate");
  CLI::Option* input_opt =
      annotate_cmd
          ->add_option("--input", annotate_input,
                       "Transcript file (uttId<TAB>text)")
          ->check(CLI::ExistingFile);
  text_opt->excludes(input_opt);
  annotate_cmd->add_option("--out", annotate_out,
                           "Output JSON path (default stdout)");

  AnnotatorConfig correct_config;
  std::string correct_nbest;
  std::string correct_out;
  double lambda = 0.5;
  double min_similarity = 0.6;
  CLI::App* correct_cmd = app.add_subcommand(
      "correct", "Rescore and repair n-best lists with graph coherence");
  add_annotator_options(correct_cmd, correct_config, /*with_fuzzy=*/false);
  correct_cmd
      ->add_option("--nbest", correct_nbest,
                   "N-best file (uttId<TAB>rank<TAB>asrScore<TAB>text)")
      ->required()
      ->check(CLI::ExistingFile);
  correct_cmd->add_option("--out", correct_out, "Reranked n-best output path")
      ->required();
  correct_cmd
      ->add_option("--lambda", lambda,
                   "Weight of recognizer score vs coherence")
      ->check(CLI::Range(0.0, 1.0));
  correct_cmd
      ->add_option("--min-similarity", min_similarity,
                   "Similarity floor for fuzzy corrections")
      ->check(CLI::Range(0.0, 1.0));

  std::string sim_ref;
  double sim_wer = 0.0;
  double sim_psub = 0.0;
  double sim_pdel = 0.0;
  double sim_pins = 0.0;
  int sim_n = 1;
  std::uint64_t sim_seed = 1;
  std::string sim_vocab;
  std::string sim_out;
  CLI::App* simulate_cmd = app.add_subcommand(
      "simulate", "Corrupt a reference transcript through a noisy channel");
  simulate_cmd->add_option("--ref", sim_ref, "Reference transcript")
      ->required()
      ->check(CLI::ExistingFile);
  simulate_cmd
      ->add_option("--wer", sim_wer,
                   "Target channel rate, split evenly into "
                   "substitution/deletion/insertion")
      ->check(CLI::Range(0.0, 1.5));
  CLI::Option* psub_opt = simulate_cmd
                              ->add_option("--psub", sim_psub,
                                           "Substitution probability per token")
                              ->check(CLI::Range(0.0, 1.0));
  CLI::Option* pdel_opt = simulate_cmd
                              ->add_option("--pdel", sim_pdel,
                                           "Deletion probability per token")
                              ->check(CLI::Range(0.0, 1.0));
  CLI::Option* pins_opt =
      simulate_cmd
          ->add_option("--pins", sim_pins,
                       "Insertion probability after each position")
          ->check(CLI::Range(0.0, 1.0));
  simulate_cmd->add_option("--n", sim_n, "Hypotheses per utterance")
      ->check(CLI::Range(1, 1000));
  simulate_cmd->add_option("--seed", sim_seed,
                           "Base seed; utterance i uses seed + 1000003*i");
  simulate_cmd->add_option("--vocab", sim_vocab,
                           "Vocabulary file (default: reference tokens)")
      ->check(CLI::ExistingFile);
  simulate_cmd
      ->add_option("--out", sim_out,
                   "Output path (transcript when --n 1, else n-best)")
      ->required();

  AnnotatorConfig eval_config;
  std::string eval_ref;
  std::string eval_hyp;
  std::string eval_label = "test";
  std::string eval_out;
  bool eval_svg = false;
  CLI::App* evaluate_cmd = app.add_subcommand(
      "evaluate", "Compare entity links over reference and test transcripts");
  add_annotator_options(evaluate_cmd, eval_config, /*with_fuzzy=*/false);
  evaluate_cmd->add_option("--ref", eval_ref, "Reference transcript")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate_cmd->add_option("--hyp", eval_hyp, "Hypothesis transcript")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate_cmd->add_option("--label", eval_label, "Test-set label for report");
  evaluate_cmd->add_option("--out", eval_out, "Report output directory")
      ->required();
  evaluate_cmd->add_flag("--svg", eval_svg, "Also write SVG bar charts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (annotate_cmd->parsed()) {
      bool have_text = text_opt->count() > 0;
      if (!have_text && input_opt->count() == 0) {
        std::cerr << "annotate: one of --text or --input is required\n";
        return 2;
      }
      return run_annotate(annotate_config, annotate_text, have_text,
                          annotate_input, annotate_out);
    }
    if (correct_cmd->parsed()) {
      return run_correct(correct_config, correct_nbest, correct_out, lambda,
                         min_similarity);
    }
    if (simulate_cmd->parsed()) {
      bool split_wer = psub_opt->count() == 0 && pdel_opt->count() == 0 &&
                       pins_opt->count() == 0;
      return run_simulate(sim_ref, sim_wer, sim_psub, sim_pdel, sim_pins,
                          split_wer, sim_n, sim_seed, sim_vocab, sim_out);
    }
    if (evaluate_cmd->parsed()) {
      return run_evaluate(eval_config, eval_ref, eval_hyp, eval_label,
                          eval_out, eval_svg);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
