// sculpt/cg_engine.cpp
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

#include "sculpt/cg_engine.hpp"

#include <algorithm>
#include <atomic>
#include <future>

#include "sculpt/cohort_io.hpp"

namespace sculpt {

namespace {

// Careful-aware pattern test for one cohort.
bool cohort_matches(const Cohort& c, const Pattern& p, bool careful) {
  if (careful) {
    return c.readings.size() == 1 && p.matches(c.readings[0]);
  }
  return p.matches_any(c);
}

}  // namespace

bool match_condition(const Sentence& s, size_t i, const ContextCondition& c) {
  const auto n = static_cast<long>(s.cohorts.size());
  long start = static_cast<long>(i) + c.offset;
  bool result = false;
  if (!c.scan) {
    if (start >= 0 && start < n) {
      result = cohort_matches(s.cohorts[static_cast<size_t>(start)], c.pattern,
                              c.careful);
    }
  } else {
    long step = c.offset > 0 ? 1 : -1;
    bool barrier_hit = false;
    for (long pos = start; pos >= 0 && pos < n; pos += step) {
      const Cohort& cohort = s.cohorts[static_cast<size_t>(pos)];
      if (cohort_matches(cohort, c.pattern, c.careful)) {
        result = !barrier_hit;
        break;
      }
      // Barriers count only strictly between the scan origin and a match.
      if (pos != start && c.barrier && c.barrier->matches_any(cohort)) {
        barrier_hit = true;
      }
    }
  }
  return c.negated ? !result : result;
}

ApplyResult apply_constraint(Sentence& s, const Constraint& k, int pass) {
  ApplyResult res;
  for (size_t i = 0; i < s.cohorts.size(); ++i) {
    Cohort& cohort = s.cohorts[i];
    // The grammar is never consulted for unambiguous analyses.
    if (cohort.readings.size() < 2) continue;

    bool hold = true;
    for (const auto& cond : k.conditions) {
      if (!match_condition(s, i, cond)) {
        hold = false;
        break;
      }
    }
    if (!hold) continue;

    std::vector<char> drop(cohort.readings.size(), 0);
    size_t n_drop = 0;
    if (k.op == ConstraintOp::Remove) {
      for (size_t r = 0; r < cohort.readings.size(); ++r) {
        if (k.target.matches(cohort.readings[r])) {
          drop[r] = 1;
          ++n_drop;
        }
      }
    } else {
      size_t n_match = 0;
      for (size_t r = 0; r < cohort.readings.size(); ++r) {
        if (k.target.matches(cohort.readings[r])) ++n_match;
      }
      if (n_match == 0) continue;  // vacuous SELECT
      for (size_t r = 0; r < cohort.readings.size(); ++r) {
        if (!k.target.matches(cohort.readings[r])) {
          drop[r] = 1;
          ++n_drop;
        }
      }
    }
    if (n_drop == 0) continue;
    if (n_drop == cohort.readings.size()) continue;  // last-reading guard

    TraceEvent ev;
    ev.constraint_id = k.id;
    ev.cohort_index = i;
    ev.pass = pass;
    std::vector<Reading> kept;
    kept.reserve(cohort.readings.size() - n_drop);
    for (size_t r = 0; r < cohort.readings.size(); ++r) {
      if (drop[r]) {
        ev.removed.push_back(cohort.readings[r]);
      } else {
        kept.push_back(std::move(cohort.readings[r]));
      }
    }
    cohort.readings = std::move(kept);
    res.removals += n_drop;
    res.events.push_back(std::move(ev));
  }
  return res;
}

namespace {

// Full passes over one tier until a pass removes nothing.
bool run_tier(Sentence& s, const std::vector<Constraint>& tier,
              const EngineConfig& cfg, int* pass_no,
              std::vector<TraceEvent>* trace) {
  for (int p = 0; p < cfg.max_passes; ++p) {
    ++*pass_no;
    size_t removed = 0;
    for (const auto& k : tier) {
      ApplyResult r = apply_constraint(s, k, *pass_no);
      removed += r.removals;
      for (auto& e : r.events) trace->push_back(std::move(e));
    }
    if (removed == 0) return true;
  }
  return false;
}

}  // namespace

DisambiguateResult disambiguate(const Sentence& s, const CgGrammar& g,
                                const EngineConfig& cfg) {
  DisambiguateResult out;
  out.sentence = s;
  int pass_no = 0;
  bool ok = run_tier(out.sentence, g.strict, cfg, &pass_no, &out.trace);
  if (cfg.apply_heuristic_tier) {
    ok = run_tier(out.sentence, g.heuristic, cfg, &pass_no, &out.trace) && ok;
    ok = run_tier(out.sentence, g.strict, cfg, &pass_no, &out.trace) && ok;
  }
  out.pass_limit_hit = !ok;
  return out;
}

DisambiguateDocResult disambiguate_document(const Document& d,
                                            const CgGrammar& g,
                                            const EngineConfig& cfg,
                                            int jobs) {
  DisambiguateDocResult out;
  out.document.sentences.resize(d.sentences.size());
  std::vector<DisambiguateResult> results(d.sentences.size());

  if (jobs <= 1 || d.sentences.size() < 2) {
    for (size_t i = 0; i < d.sentences.size(); ++i) {
      results[i] = disambiguate(d.sentences[i], g, cfg);
    }
  } else {
    std::vector<std::future<void>> futs;
    std::atomic<size_t> next{0};
    for (int w = 0; w < jobs; ++w) {
      futs.push_back(std::async(std::launch::async, [&]() {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= d.sentences.size()) return;
          results[i] = disambiguate(d.sentences[i], g, cfg);
        }
      }));
    }
    for (auto& f : futs) f.get();
  }

  // Merge deterministically by sentence index.
  for (size_t i = 0; i < results.size(); ++i) {
    out.document.sentences[i] = std::move(results[i].sentence);
    for (auto& e : results[i].trace) {
      e.sentence_index = i;
      out.trace.push_back(std::move(e));
    }
    out.pass_limit_hit = out.pass_limit_hit || results[i].pass_limit_hit;
  }
  return out;
}

Sentence map_syntax(const Sentence& s, const CgGrammar& g) {
  Sentence out = s;
  for (size_t i = 0; i < out.cohorts.size(); ++i) {
    Cohort& cohort = out.cohorts[i];
    std::vector<Reading> next;
    bool changed = false;
    for (const Reading& r : cohort.readings) {
      std::vector<Tag> adds;
      for (const auto& m : g.mappings) {
        if (!m.target.matches(r)) continue;
        bool hold = true;
        for (const auto& cond : m.context) {
          // Context is evaluated against the input sentence, not the
          // partially mapped one.
          if (!match_condition(s, i, cond)) {
            hold = false;
            break;
          }
        }
        if (!hold) continue;
        for (Tag t : m.add) {
          if (std::find(adds.begin(), adds.end(), t) == adds.end()) {
            adds.push_back(t);
          }
        }
      }
      if (adds.empty()) {
        next.push_back(r);
        continue;
      }
      changed = true;
      for (Tag t : adds) {
        Reading variant = r;
        if (!variant.has_tag(t)) {
          variant.tags.push_back(t);
          variant.origin = ReadingOrigin::Mapped;
        }
        bool dup = std::any_of(next.begin(), next.end(), [&](const Reading& x) {
          return same_reading(x, variant);
        });
        if (!dup) next.push_back(std::move(variant));
      }
    }
    if (changed) cohort.readings = std::move(next);
  }
  return out;
}

std::string format_trace_event(const TraceEvent& e) {
  std::string out = "PASS " + std::to_string(e.pass) + "  RULE " +
                    e.constraint_id + "  SENT " +
                    std::to_string(e.sentence_index) + "  COHORT " +
                    std::to_string(e.cohort_index) + "  REMOVED";
  for (const auto& r : e.removed) {
    out += ' ';
    out += serialize_reading(r);
  }
  return out;
}

std::string format_trace(const std::vector<TraceEvent>& trace) {
  std::string out;
  for (const auto& e : trace) {
    out += format_trace_event(e);
    out += '\n';
  }
  return out;
}

Document replay_trace(const Document& input,
                      const std::vector<TraceEvent>& trace) {
  Document doc = input;
  for (const auto& e : trace) {
    auto& cohort = doc.sentences.at(e.sentence_index).cohorts.at(e.cohort_index);
    for (const auto& rem : e.removed) {
      auto it = std::find_if(cohort.readings.begin(), cohort.readings.end(),
                             [&](const Reading& r) { return same_reading(r, rem); });
      if (it != cohort.readings.end()) cohort.readings.erase(it);
    }
  }
  return doc;
}

}  // namespace sculpt
