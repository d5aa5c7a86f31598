// sculpt/fsig/parse.hpp
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

#ifndef SCULPT_FSIG_PARSE_HPP
#define SCULPT_FSIG_PARSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "sculpt/cohort.hpp"
#include "sculpt/fsig/rules.hpp"

namespace sculpt::fsig {

// One reading encodes as its base-form symbol followed by its tag symbols;
// a sentence string is @@ enc(r1) @ enc(r2) @ ... @@ over one reading
// choice per cohort. Punctuation cohorts encode as their display form.
std::vector<Symbol> encode_reading(const Cohort& c, const Reading& r,
                                   SymbolTable& syms);
std::vector<Symbol> encode_choice(const Sentence& s,
                                  const std::vector<size_t>& choice,
                                  SymbolTable& syms);

// Automaton whose accepting paths are exactly the reading combinations.
Dfa sentence_to_automaton(const Sentence& s, SymbolTable& syms);

// L(sent) intersected with every rule language. Rules are applied
// smallest-first and intermediates minimized; the result is order
// independent.
Dfa intersect_all(const Dfa& sent, const std::vector<Dfa>& rules);

// Decodes up to `limit` accepting paths, shortlex by symbol id, back into
// single-reading sentences. Throws when a path does not decode against
// the source sentence (a rule corrupted boundary structure).
std::vector<Sentence> enumerate_parses(const Dfa& a, const Sentence& source,
                                       SymbolTable& syms, size_t limit);

struct Penalty {
  std::map<Symbol, int> weights;  // unmapped symbols cost 0

  // Charges 1 per heuristic-origin flag symbol plus any extra symbols.
  static Penalty defaults(SymbolTable& syms, const TagPool& tags,
                          const std::vector<std::string>& rare_symbols = {});
};

// The accepting path minimizing total symbol cost, ties broken shortlex;
// nullopt iff the language is empty.
std::optional<Sentence> select_parse(const Dfa& a, const Sentence& source,
                                     SymbolTable& syms, const Penalty& p);

// Oracle: enumerate every reading combination and keep those where every
// rule holds under the denotational definitions (entire-prefix/suffix
// contexts, for-all decompositions). Product of reading counts must stay
// within `bound`.
std::vector<Sentence> brute_force_filter(const Sentence& s,
                                         const FsigGrammar& g,
                                         SymbolTable& syms,
                                         size_t bound = 4096);

// Shared by the oracle and tests: does `w` satisfy the rule denotationally?
bool rule_holds(const std::vector<Symbol>& w, const FsigRule& rule);

}  // namespace sculpt::fsig

#endif  // SCULPT_FSIG_PARSE_HPP
