// sculpt/cg_engine.hpp
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

#ifndef SCULPT_CG_ENGINE_HPP
#define SCULPT_CG_ENGINE_HPP

#include <string>
#include <vector>

#include "sculpt/cg_grammar.hpp"
#include "sculpt/cohort.hpp"

namespace sculpt {

struct TraceEvent {
  std::string constraint_id;
  size_t sentence_index = 0;
  size_t cohort_index = 0;
  std::vector<Reading> removed;  // copies, non-empty
  int pass = 0;
};

struct EngineConfig {
  int max_passes = 100;  // safety bound per tier run
  bool apply_heuristic_tier = false;
  bool trace = false;
};

// True iff the condition holds for the cohort at index i. Off-sentence
// positions fail before negation. Careful conditions are satisfied only by
// fully unambiguous cohorts. Scans run outward from i+offset to the
// sentence edge; a barrier match strictly between the scan origin and a
// candidate blocks it.
bool match_condition(const Sentence& s, size_t i, const ContextCondition& c);

struct ApplyResult {
  size_t removals = 0;
  std::vector<TraceEvent> events;
};

// Applies one constraint across the sentence, left to right, in place.
// Only cohorts with two or more readings are touched, and an application
// that would empty a cohort is skipped entirely.
ApplyResult apply_constraint(Sentence& s, const Constraint& k, int pass = 0);

struct DisambiguateResult {
  Sentence sentence;
  std::vector<TraceEvent> trace;
  bool pass_limit_hit = false;
};

// Runs the strict tier to fixpoint; with cfg.apply_heuristic_tier, then the
// heuristic tier to fixpoint and the strict tier once more. Readings only
// ever shrink and every cohort keeps at least one.
DisambiguateResult disambiguate(const Sentence& s, const CgGrammar& g,
                                const EngineConfig& cfg = {});

struct DisambiguateDocResult {
  Document document;
  std::vector<TraceEvent> trace;
  bool pass_limit_hit = false;
};

DisambiguateDocResult disambiguate_document(const Document& d,
                                            const CgGrammar& g,
                                            const EngineConfig& cfg = {},
                                            int jobs = 1);

// Introduces syntactic-function alternatives: a reading matching a mapping
// rule whose context holds gets one variant per added tag.
Sentence map_syntax(const Sentence& s, const CgGrammar& g);

// One line per event:
//   PASS p  RULE id  SENT s  COHORT c  REMOVED ("base" TAGS...)
std::string format_trace_event(const TraceEvent& e);
std::string format_trace(const std::vector<TraceEvent>& trace);

// Re-applies recorded removals to the original input; reproduces the
// engine's output exactly.
Document replay_trace(const Document& input,
                      const std::vector<TraceEvent>& trace);

}  // namespace sculpt

#endif  // SCULPT_CG_ENGINE_HPP
