// sculpt/fsig/automaton.hpp
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

#ifndef SCULPT_FSIG_AUTOMATON_HPP
#define SCULPT_FSIG_AUTOMATON_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "sculpt/fsig/symbols.hpp"

namespace sculpt::fsig {

// Deterministic, complete automaton. Each state carries explicit edges for
// symbols the automaton names plus an `other` edge absorbing every symbol
// it does not. The rule alphabet is open-ended, so OTHER stands for "any
// symbol this rule does not mention".
struct Dfa {
  struct State {
    std::map<Symbol, uint32_t> edges;
    uint32_t other = 0;
    bool accept = false;
  };
  std::vector<State> states;        // state 0 is the start state
  std::set<Symbol> named;           // symbols with explicit edges anywhere

  uint32_t step(uint32_t state, Symbol s) const {
    const auto& st = states[state];
    auto it = st.edges.find(s);
    return it == st.edges.end() ? st.other : it->second;
  }

  bool accepts(const std::vector<Symbol>& word) const;
  size_t num_states() const { return states.size(); }
};

// Nondeterministic automaton with epsilon moves used as the construction
// intermediate. An edge is either one symbol or ANY-OTHER, meaning every
// symbol outside the automaton's current named set.
struct Nfa {
  struct Edge {
    bool any_other = false;
    Symbol sym = 0;
    uint32_t to = 0;
  };
  struct State {
    std::vector<Edge> edges;
    std::vector<uint32_t> eps;
    bool accept = false;
  };
  std::vector<State> states;
  uint32_t start = 0;
  std::set<Symbol> named;

  uint32_t add_state();
  void add_edge(uint32_t from, Symbol s, uint32_t to);
  void add_any_other(uint32_t from, uint32_t to);
  void add_eps(uint32_t from, uint32_t to);

  // Turns ANY-OTHER edges into explicit edges for `extra` symbols so the
  // named set can grow without changing the language.
  void lift(const std::set<Symbol>& extra);

  static Nfa from_dfa(const Dfa& d);
};

Dfa determinize(const Nfa& n);
Dfa minimize(const Dfa& d);
Dfa complement(const Dfa& d);

enum class ProductOp { And, Or, Diff };
Dfa product(const Dfa& a, const Dfa& b, ProductOp op);

bool is_empty(const Dfa& d);
bool equivalent(const Dfa& a, const Dfa& b);

// All accepting words when the language is finite (states on accepting
// paths form a DAG); nullopt otherwise. Words come back in shortlex order
// by symbol id. `cap` bounds the number of words collected.
std::optional<std::vector<std::vector<Symbol>>> enumerate_language(
    const Dfa& d, size_t cap);

// Number of accepting words if finite.
std::optional<size_t> count_language(const Dfa& d);

// Minimum-cost accepting word; ties broken by shortlex. Requires a finite
// language. nullopt when the language is empty.
std::optional<std::vector<Symbol>> min_cost_word(
    const Dfa& d, const std::map<Symbol, int>& weights);

}  // namespace sculpt::fsig

#endif  // SCULPT_FSIG_AUTOMATON_HPP
