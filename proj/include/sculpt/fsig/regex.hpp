// sculpt/fsig/regex.hpp
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

#ifndef SCULPT_FSIG_REGEX_HPP
#define SCULPT_FSIG_REGEX_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sculpt/fsig/automaton.hpp"
#include "sculpt/fsig/symbols.hpp"

namespace sculpt::fsig {

// Extended regular expressions over the symbol alphabet.
struct Regex;
using RegexPtr = std::shared_ptr<const Regex>;

struct Regex {
  enum class Kind {
    Epsilon,  // the empty string
    Literal,  // one symbol
    Any,      // any one symbol
    Concat,
    Union,
    Inter,
    Diff,
    Compl,
    Star,
    Plus,
    Opt,
  };
  Kind kind = Kind::Epsilon;
  Symbol sym = 0;
  std::vector<RegexPtr> kids;
};

RegexPtr rx_epsilon();
RegexPtr rx_literal(Symbol s);
RegexPtr rx_any();
RegexPtr rx_concat(std::vector<RegexPtr> kids);
RegexPtr rx_union(std::vector<RegexPtr> kids);
RegexPtr rx_inter(RegexPtr a, RegexPtr b);
RegexPtr rx_diff(RegexPtr a, RegexPtr b);
RegexPtr rx_compl(RegexPtr a);
RegexPtr rx_star(RegexPtr a);
RegexPtr rx_plus(RegexPtr a);
RegexPtr rx_opt(RegexPtr a);
// .*  -- used pervasively in contexts
RegexPtr rx_sigma_star();

// Parses the rule-file regex syntax: juxtaposition concatenates, `|` `&`
// `-` `~` `*` `+` `?` `.` operate, `[ ]` groups, "..." is a base-form
// literal, '...' forces any text to be one tag symbol, bare atoms are tag
// symbols or names bound by DEF. `&`/`-` bind tighter than `|`; postfix
// operators bind tightest and must follow a group, `.`, or a symbol.
RegexPtr parse_regex(std::string_view text, SymbolTable& syms,
                     const std::map<std::string, RegexPtr>& defs = {});

// Minimal deterministic automaton for the denoted language.
Dfa compile_regex(const RegexPtr& r);

// Construction pieces shared with the implication compiler.
Nfa regex_to_nfa(const RegexPtr& r);

std::string format_regex(const RegexPtr& r, const SymbolTable& syms);

}  // namespace sculpt::fsig

#endif  // SCULPT_FSIG_REGEX_HPP
