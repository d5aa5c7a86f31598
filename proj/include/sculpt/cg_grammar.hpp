// sculpt/cg_grammar.hpp
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

#ifndef SCULPT_CG_GRAMMAR_HPP
#define SCULPT_CG_GRAMMAR_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sculpt/cohort.hpp"

namespace sculpt {

// One conjunction of requirements on a reading: an optional base-form
// literal plus tags that must all be present. `any` matches every reading.
struct PatternConj {
  std::optional<std::string> base;
  std::vector<Tag> tags;
  bool any = false;

  bool matches(const Reading& r) const;
  bool operator==(const PatternConj&) const = default;
};

// Disjunction of conjunctions; a reading matches iff some alternative does.
struct Pattern {
  std::vector<PatternConj> alternatives;

  bool matches(const Reading& r) const;
  // True when some reading of the cohort matches.
  bool matches_any(const Cohort& c) const;
  bool operator==(const Pattern&) const = default;
};

// A positional test relative to the target cohort.
//   offset   relative position; negative = left
//   careful  the context cohort must be fully unambiguous
//   scan     search outward from `offset` toward the sentence edge
//   barrier  scan stops before a cohort matching it
//   negated  flips the outcome (off-sentence positions fail before negation)
struct ContextCondition {
  int offset = 0;
  bool careful = false;
  bool scan = false;
  bool negated = false;
  std::optional<Pattern> barrier;
  Pattern pattern;

  bool operator==(const ContextCondition&) const = default;
};

enum class ConstraintOp : uint8_t { Remove, Select };
enum class Tier : uint8_t { Strict, Heuristic };

struct Constraint {
  std::string id;
  ConstraintOp op = ConstraintOp::Remove;
  Pattern target;
  std::vector<ContextCondition> conditions;  // conjunction
  Tier tier = Tier::Strict;
};

// Adds syntactic-function alternatives to matching readings.
struct MappingRule {
  Pattern target;
  std::vector<ContextCondition> context;
  std::vector<Tag> add;  // non-empty, all SynFunc
};

struct CgGrammar {
  std::set<std::string> delimiters = {"$.", "$!", "$?"};
  std::vector<Constraint> strict;
  std::vector<Constraint> heuristic;
  std::vector<MappingRule> mappings;

  const Constraint* find(const std::string& id) const;
};

// Parses the rule DSL:
//
//   DELIMITERS "<$.>" "<$!>" "<$?>" ;
//   SECTION strict ;
//   name: REMOVE (VFIN) IF (-1C (DET)) ;
//   SELECT (V INF) IF (-1 (INFMARK)) ;
//   REMOVE (V) IF (*-1 (DET) BARRIER (VFIN)) (1 (N)) ;
//   MAP (@+FAUXV) TARGET (V AUXMOD) ;
//   SECTION heuristic ;
//   REMOVE (N GEN) IF (1 (V)) ;
//
// Patterns allow alternatives `(A | N)`, base-form literals `("that" DET)`
// and the match-anything `(*)`. Conditions allow a NOT prefix, a careful
// `C` suffix on the offset and a `*` scan prefix. The label before a rule
// is optional; unlabeled rules get sequential ids. Throws ParseError.
CgGrammar parse_cg_grammar(std::string_view text, TagPool& pool);
CgGrammar load_cg_grammar(const std::string& path, TagPool& pool);

// Canonical DSL text; parse(print(g)) is structurally equal to g.
std::string print_cg_grammar(const CgGrammar& g);

// Non-fatal diagnostics: tags never declared in the tagset registry,
// REMOVE/SELECT pairs with identical target and conditions, barriers that
// cannot match anything.
std::vector<std::string> validate_cg_grammar(const CgGrammar& g,
                                             const TagPool& pool);

}  // namespace sculpt

#endif  // SCULPT_CG_GRAMMAR_HPP
