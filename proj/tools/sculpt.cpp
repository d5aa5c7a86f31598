// tools/sculpt.cpp
//
// Copyright 2026  The sculpt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.
//
// Batch front end: analyze | disambiguate | fsig-parse | eval plus the
// extract-ngroups and stats helpers. Data flows through stdin/stdout in the
// cohort text format; diagnostics go to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sculpt/cg_engine.hpp"
#include "sculpt/cohort_io.hpp"
#include "sculpt/fsig/parse.hpp"
#include "sculpt/lexicon.hpp"
#include "sculpt/metrics.hpp"
#include "sculpt/text_heuristics.hpp"

namespace {

using namespace sculpt;

struct Paths {
  std::string data_dir;
  std::string tagset;
  std::string lexicon;
  std::string guesser;
  std::string grammar;
  std::string fsig_grammar;
  std::string input;   // empty = stdin
  std::string output;  // empty = stdout

  void resolve() {
    if (data_dir.empty()) {
      if (const char* env = std::getenv("SCULPT_DATA")) data_dir = env;
    }
    auto fill = [&](std::string& p, const char* name) {
      if (p.empty() && !data_dir.empty()) p = data_dir + "/" + name;
    };
    fill(tagset, "tagset.txt");
    fill(lexicon, "demo.lex");
    fill(guesser, "guesser.rules");
    fill(grammar, "grammar.cg");
    fill(fsig_grammar, "fsig.rules");
  }
};

std::string read_all(const std::string& path) {
  if (path.empty()) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_all(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

void add_io_options(CLI::App* cmd, Paths* paths) {
  cmd->add_option("-d,--data-dir", paths->data_dir,
                  "directory with tagset/lexicon/grammar files "
                  "(default: $SCULPT_DATA)");
  cmd->add_option("--tagset", paths->tagset, "tagset registry file");
  cmd->add_option("-i,--input", paths->input, "input file (default: stdin)");
  cmd->add_option("-o,--output", paths->output,
                  "output file (default: stdout)");
}

int run(int argc, char** argv) {
  CLI::App app{
      "sculpt - reductionistic surface parsing: constraint-based "
      "disambiguation and finite-state intersection parsing"};
  app.require_subcommand(1);

  Paths paths;

  // --- analyze ---------------------------------------------------------
  auto* analyze_cmd = app.add_subcommand(
      "analyze", "introduce all alternative readings for tokenized text");
  bool analyze_stats = false;
  add_io_options(analyze_cmd, &paths);
  analyze_cmd->add_option("--lexicon", paths.lexicon, "full-form lexicon");
  analyze_cmd->add_option("--guesser", paths.guesser, "guesser rule file");
  analyze_cmd->add_flag("--stats", analyze_stats,
                        "print readings/word to stderr");

  // --- disambiguate ----------------------------------------------------
  auto* dis_cmd = app.add_subcommand(
      "disambiguate", "discard contextually illegitimate readings");
  bool heuristic = false, text_based = false;
  std::string trace_path;
  int jobs = 1;
  int max_passes = 100;
  add_io_options(dis_cmd, &paths);
  dis_cmd->add_option("--grammar", paths.grammar, "constraint grammar file");
  dis_cmd->add_flag("--heuristic", heuristic,
                    "apply the heuristic tier after the strict tier");
  dis_cmd->add_flag("--text-based", text_based,
                    "run the whole-document pipeline: noun groups plus "
                    "lexical predominance (disables streaming)");
  dis_cmd->add_option("--trace", trace_path, "write per-removal trace lines");
  dis_cmd->add_option("-j,--jobs", jobs, "sentence-level parallelism");
  dis_cmd->add_option("--max-passes", max_passes, "pass bound per tier");

  // --- fsig-parse ------------------------------------------------------
  auto* fsig_cmd = app.add_subcommand(
      "fsig-parse", "intersect rule automata with sentence automata");
  bool fsig_all = false, fsig_one = false, fsig_oracle = false;
  size_t fsig_limit = 1000;
  size_t oracle_bound = 4096;
  std::string penalties_path;
  add_io_options(fsig_cmd, &paths);
  fsig_cmd->add_option("--rules", paths.fsig_grammar, "rule automata file");
  fsig_cmd->add_flag("--all", fsig_all, "print every surviving parse");
  fsig_cmd->add_flag("--one", fsig_one, "select a single parse per sentence");
  fsig_cmd->add_flag("--oracle", fsig_oracle,
                     "cross-check against brute-force enumeration");
  fsig_cmd->add_option("--limit", fsig_limit, "parse cap under --all");
  fsig_cmd->add_option("--oracle-bound", oracle_bound,
                       "combination bound for --oracle");
  fsig_cmd->add_option("--penalties", penalties_path,
                       "penalty table: SYMBOL <tab> COST per line");

  // --- eval ------------------------------------------------------------
  auto* eval_cmd =
      app.add_subcommand("eval", "recall/precision against a gold standard");
  std::string gold_path;
  bool tsv = false, include_syn = false;
  add_io_options(eval_cmd, &paths);
  eval_cmd->add_option("--gold", gold_path, "gold-standard cohort file")
      ->required();
  eval_cmd->add_flag("--tsv", tsv, "machine-readable output");
  eval_cmd->add_flag("--syntax", include_syn,
                     "include @-function tags in reading identity");

  // --- extract-ngroups -------------------------------------------------
  auto* ng_cmd = app.add_subcommand(
      "extract-ngroups", "list unambiguous noun groups, one per line");
  add_io_options(ng_cmd, &paths);

  // --- stats -----------------------------------------------------------
  auto* stats_cmd = app.add_subcommand(
      "stats", "form/POS counts over the unambiguous part, as TSV");
  add_io_options(stats_cmd, &paths);

  CLI11_PARSE(app, argc, argv);
  paths.resolve();

  TagPool pool;
  if (!paths.tagset.empty()) pool.load_tagset(paths.tagset);

  if (analyze_cmd->parsed()) {
    Lexicon lex = Lexicon::load(paths.lexicon, pool, [](const std::string& w) {
      std::cerr << "warning: " << w << "\n";
    });
    Guesser g = Guesser::load(paths.guesser, pool);
    auto tokens = tokenize_demo(read_all(paths.input));
    Document doc = analyze_document(lex, g, pool, tokens);
    write_all(paths.output, serialize_cohort_stream(doc));
    if (analyze_stats) {
      auto st = ambiguity_stats(doc);
      std::cerr << "readings/word: " << format_ratio2(st.readings_per_word)
                << "\n";
    }
    return 0;
  }

  if (dis_cmd->parsed()) {
    CgGrammar grammar = load_cg_grammar(paths.grammar, pool);
    Document doc = parse_cohort_stream(read_all(paths.input), pool,
                                       default_delimiters());
    EngineConfig cfg;
    cfg.apply_heuristic_tier = heuristic;
    cfg.max_passes = max_passes;
    cfg.trace = !trace_path.empty();
    std::string out;
    std::vector<TraceEvent> trace;
    if (text_based) {
      TextHeuristicsConfig tcfg;
      tcfg.engine = cfg;
      auto res = text_disambiguate(doc, grammar, tcfg);
      out = serialize_cohort_stream(res.document);
    } else {
      auto res = disambiguate_document(doc, grammar, cfg, jobs);
      if (res.pass_limit_hit) {
        std::cerr << "warning: pass limit reached before fixpoint\n";
      }
      out = serialize_cohort_stream(res.document);
      trace = std::move(res.trace);
    }
    write_all(paths.output, out);
    if (!trace_path.empty()) {
      std::ofstream tf(trace_path);
      if (!tf) throw std::runtime_error("cannot open trace file");
      tf << format_trace(trace);
    }
    return 0;
  }

  if (fsig_cmd->parsed()) {
    fsig::SymbolTable syms;
    fsig::FsigGrammar grammar =
        fsig::load_fsig_grammar(paths.fsig_grammar, syms);
    Document doc = parse_cohort_stream(read_all(paths.input), pool,
                                       default_delimiters());
    std::vector<fsig::Dfa> rules;
    for (const auto& r : grammar.rules) {
      rules.push_back(fsig::compile_rule(r));
    }
    fsig::Penalty penalty = fsig::Penalty::defaults(syms, pool);
    if (!penalties_path.empty()) {
      std::ifstream pf(penalties_path);
      if (!pf) throw std::runtime_error("cannot open penalty table");
      std::string sym;
      int cost;
      while (pf >> sym >> cost) penalty.weights[syms.tag(sym)] = cost;
    }

    std::string out;
    std::vector<size_t> rejected;
    for (size_t i = 0; i < doc.sentences.size(); ++i) {
      const Sentence& sent = doc.sentences[i];
      fsig::Dfa sa = fsig::sentence_to_automaton(sent, syms);
      fsig::Dfa result = fsig::intersect_all(sa, rules);
      if (fsig_oracle) {
        auto fast = fsig::enumerate_parses(result, sent, syms,
                                           oracle_bound + 1);
        auto slow = fsig::brute_force_filter(sent, grammar, syms,
                                             oracle_bound);
        auto key = [](const std::vector<Sentence>& v) {
          std::string k;
          for (const auto& s : v) k += serialize_sentence(s) + "\x01";
          return k;
        };
        if (key(fast) != key(slow)) {
          std::cerr << "oracle mismatch on sentence " << i << ": "
                    << fast.size() << " vs " << slow.size() << " parses\n";
          return 1;
        }
      }
      if (fsig_one) {
        auto best = fsig::select_parse(result, sent, syms, penalty);
        if (!best) {
          rejected.push_back(i);
          continue;
        }
        out += serialize_sentence(*best);
      } else if (fsig_all) {
        auto parses = fsig::enumerate_parses(result, sent, syms, fsig_limit);
        for (size_t k = 0; k < parses.size(); ++k) {
          out += serialize_sentence(parses[k]);
          out += '\n';
        }
      } else {
        auto n = fsig::count_language(result);
        out += "sentence " + std::to_string(i) + ": " +
               (n ? std::to_string(*n) : std::string("unbounded")) +
               " parses\n";
      }
    }
    write_all(paths.output, out);
    if (!rejected.empty()) {
      std::cerr << "rejected sentences (empty intersection):";
      for (size_t i : rejected) std::cerr << ' ' << i;
      std::cerr << "\n";
      return 2;
    }
    return 0;
  }

  if (eval_cmd->parsed()) {
    Document out_doc = parse_cohort_stream(read_all(paths.input), pool,
                                           default_delimiters());
    Document gold_doc = load_cohort_file(gold_path, pool);
    GoldDoc gold = GoldDoc::from_document(gold_doc);
    MetricOptions opts;
    opts.include_synfunc = include_syn;
    EvalReport report = evaluate(out_doc, gold, opts);
    write_all(paths.output, tsv ? format_eval_report_tsv(report)
                                : format_eval_report(report));
    return 0;
  }

  if (ng_cmd->parsed()) {
    Document doc = parse_cohort_stream(read_all(paths.input), pool,
                                       default_delimiters());
    write_all(paths.output, format_noun_groups(extract_noun_groups(doc)));
    return 0;
  }

  if (stats_cmd->parsed()) {
    Document doc = parse_cohort_stream(read_all(paths.input), pool,
                                       default_delimiters());
    write_all(paths.output, collect_lexical_stats(doc).to_tsv());
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const MisalignedGold& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
