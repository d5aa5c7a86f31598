// sculpt/text_heuristics.hpp
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

#ifndef SCULPT_TEXT_HEURISTICS_HPP
#define SCULPT_TEXT_HEURISTICS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sculpt/cg_engine.hpp"
#include "sculpt/cohort.hpp"

namespace sculpt {

// Part-of-speech counts over the fully disambiguated part of a text,
// keyed by case-folded surface form (or lemma, when configured).
struct LexStats {
  std::map<std::string, std::map<std::string, size_t>> counts;

  std::optional<size_t> count(const std::string& form,
                              const std::string& pos) const;
  void add(const std::string& form, const std::string& pos);
  size_t total() const;

  // TSV dump: form <tab> POS <tab> count, sorted.
  std::string to_tsv() const;
};

LexStats collect_lexical_stats(const Document& d, bool lemma_keyed = false);

struct PredominanceConfig {
  double threshold = 2.0;  // "at least twice as often"
  // Unordered POS pairs eligible for resolution, as tag text.
  std::vector<std::pair<std::string, std::string>> eligible = {{"N", "V"}};
  bool lemma_keyed = false;
};

// Majority-principle resolution of one cohort: when its ambiguity is
// exactly an eligible POS pair and one side clears the threshold against
// the other (both counts present), keep only the winning side's readings.
Cohort resolve_by_predominance(const Cohort& c, const LexStats& st,
                               const PredominanceConfig& cfg = {});

// A nominal head with at least one premodifier, as (lemma, POS-text)
// pairs; the head is the last item.
struct NounGroup {
  std::vector<std::pair<std::string, std::string>> items;

  bool operator<(const NounGroup& o) const { return items < o.items; }
  bool operator==(const NounGroup& o) const { return items == o.items; }
};

std::string format_noun_group(const NounGroup& g);

// Maximal runs of fully unambiguous N/A cohorts ending in a noun head.
std::set<NounGroup> extract_noun_groups(const Document& d);

// Re-marks every (also inflected) instance of the groups: at window
// positions where each cohort has some reading with the group's lemma and
// POS, all other readings are dropped.
Document mark_noun_groups(const Document& d,
                          const std::set<NounGroup>& groups);

// Noun-group list file: one group per line, `cylinder/N head/N`.
std::set<NounGroup> load_noun_groups(const std::string& path);
std::string format_noun_groups(const std::set<NounGroup>& groups);

struct TextHeuristicsConfig {
  EngineConfig engine;
  PredominanceConfig predominance;
  bool use_noun_groups = true;
  bool use_predominance = true;
  // Text-generic mode: apply groups learned elsewhere instead of groups
  // extracted from this document.
  std::optional<std::set<NounGroup>> external_groups;
};

struct TextDisambiguateResult {
  Document document;
  std::set<NounGroup> groups;
  LexStats stats;
};

// The whole-document pipeline: disambiguate, extract noun groups, mark
// them throughout, disambiguate again, then resolve remaining eligible
// ambiguities by lexical predominance and run one final pass.
TextDisambiguateResult text_disambiguate(const Document& d, const CgGrammar& g,
                                         const TextHeuristicsConfig& cfg = {});

}  // namespace sculpt

#endif  // SCULPT_TEXT_HEURISTICS_HPP
