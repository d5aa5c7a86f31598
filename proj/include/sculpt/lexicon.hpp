// sculpt/lexicon.hpp
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

#ifndef SCULPT_LEXICON_HPP
#define SCULPT_LEXICON_HPP

#include <functional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "sculpt/cohort.hpp"
#include "sculpt/cohort_io.hpp"

namespace sculpt {

// Full-form lexicon: case-folded surface -> reading templates. Stands in
// for a morphological analyser; entries reproduce its observable output.
class Lexicon {
public:
  // Lexicon file: cohort-format blocks keyed by form. Duplicate forms merge
  // their readings (a warning is passed to `warn` when given).
  static Lexicon load(const std::string& path, TagPool& pool,
                      const std::function<void(const std::string&)>& warn = {});

  // All readings for the case-folded form, or nullptr when absent.
  const std::vector<Reading>* lookup(const std::string& surface) const;

  const std::set<std::string>& delimiters() const { return delimiters_; }
  size_t size() const { return entries_.size(); }

  void add_entry(const std::string& form, std::vector<Reading> readings);

private:
  std::unordered_map<std::string, std::vector<Reading>> entries_;
  std::set<std::string> delimiters_ = default_delimiters();
};

// One ordered analysis rule for out-of-lexicon words. All productions carry
// the heuristic-origin flag.
struct GuesserRule {
  int priority = 0;
  std::string suffix;           // without the leading '-'; empty = no test
  std::string prefix;           // without the trailing '-'; empty = no test
  bool need_capitalized = false;
  bool need_digit = false;
  bool need_hyphen = false;
  std::vector<Reading> productions;
  bool terminal = false;

  bool matches(const std::string& surface) const;
};

class Guesser {
public:
  // Rule file: one rule per line,
  //   PRIORITY PATTERN -> TAGS [; TAGS]... [TERMINAL]
  // with PATTERN one of suffix:"-xx", prefix:"xx-", shape:capitalized,
  // shape:contains-digit, shape:contains-hyphen, or conjunctions via '&'.
  static Guesser load(const std::string& path, TagPool& pool);

  // Productions of matching rules in priority order, stopping after the
  // first terminal match; the default noun analysis when nothing matches.
  // Never empty. Every reading has origin Guesser and the heuristic flag.
  std::vector<Reading> guess(const std::string& surface) const;

  const std::vector<GuesserRule>& rules() const { return rules_; }

private:
  std::vector<GuesserRule> rules_;  // sorted by priority
  std::vector<Reading> default_productions_;
};

// Context-free introduction of alternatives: one cohort per token, readings
// from the lexicon or the guesser, '$'-prefixed tokens become punctuation
// cohorts. Total: never fails, never yields an empty word cohort.
Sentence analyze(const Lexicon& lex, const Guesser& g, TagPool& pool,
                 const std::vector<std::string>& tokens);

// Splits a token stream into sentences at the lexicon's delimiters and
// analyzes each. A trailing undelimited run still forms a sentence.
Document analyze_document(const Lexicon& lex, const Guesser& g, TagPool& pool,
                          const std::vector<std::string>& tokens);

// Whitespace splitter for demos; sentence-level punctuation is rewritten to
// its '$'-prefixed marker form.
std::vector<std::string> tokenize_demo(const std::string& text);

}  // namespace sculpt

#endif  // SCULPT_LEXICON_HPP
