// sculpt/fsig/rules.hpp
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

#ifndef SCULPT_FSIG_RULES_HPP
#define SCULPT_FSIG_RULES_HPP

#include <map>
#include <string>
#include <vector>

#include "sculpt/fsig/regex.hpp"

namespace sculpt::fsig {

// A category is licensed only where one of its left/right context pairs
// holds; each context matches the entire prefix/suffix.
struct ImplicationRule {
  std::string name;
  RegexPtr center;
  std::vector<std::pair<RegexPtr, RegexPtr>> contexts;  // non-empty
};

struct FsigRule {
  enum class Kind { Implication, Reject } kind = Kind::Reject;
  std::string name;
  ImplicationRule implication;  // when kind == Implication
  RegexPtr reject;              // when kind == Reject
};

struct FsigGrammar {
  std::vector<FsigRule> rules;
  std::map<std::string, RegexPtr> defs;
};

// Rule file:
//   # comment
//   DEF name = regex ;
//   RULE "label": center => left _ right , left _ right ;
//   REJECT regex ;
FsigGrammar parse_fsig_grammar(std::string_view text, SymbolTable& syms);
FsigGrammar load_fsig_grammar(const std::string& path, SymbolTable& syms);

// Accepts w iff every occurrence of the center (over every decomposition
// w = u x v, x in L(center)) has some context i with u in L(left_i) and
// v in L(right_i). Built as the complement of the union, over choice
// functions f, of A_f . center . B_f with A_f/B_f the intersections of the
// complemented left/right languages. Rejects rules with more than 12
// contexts (the construction enumerates 2^n terms).
Dfa compile_implication(const ImplicationRule& rule);

Dfa compile_rule(const FsigRule& rule);

}  // namespace sculpt::fsig

#endif  // SCULPT_FSIG_RULES_HPP
