// sculpt/fsig/parse.cpp
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

#include "sculpt/fsig/parse.hpp"

#include <algorithm>
#include <stdexcept>

namespace sculpt::fsig {

std::vector<Symbol> encode_reading(const Cohort& c, const Reading& r,
                                   SymbolTable& syms) {
  std::vector<Symbol> out;
  if (c.is_punct) {
    out.push_back(syms.base(c.display_form));
    return out;
  }
  out.push_back(syms.base(r.base));
  for (Tag t : r.tags) out.push_back(syms.tag(t.text()));
  return out;
}

std::vector<Symbol> encode_choice(const Sentence& s,
                                  const std::vector<size_t>& choice,
                                  SymbolTable& syms) {
  std::vector<Symbol> w;
  w.push_back(syms.sentence_edge());
  for (size_t i = 0; i < s.cohorts.size(); ++i) {
    if (i > 0) w.push_back(syms.word_boundary());
    const Cohort& c = s.cohorts[i];
    if (c.is_punct) {
      w.push_back(syms.base(c.display_form));
    } else {
      auto enc = encode_reading(c, c.readings.at(choice[i]), syms);
      w.insert(w.end(), enc.begin(), enc.end());
    }
  }
  w.push_back(syms.sentence_edge());
  return w;
}

Dfa sentence_to_automaton(const Sentence& s, SymbolTable& syms) {
  Nfa n;
  uint32_t start = n.add_state();
  n.start = start;
  uint32_t cur = n.add_state();
  n.add_edge(start, syms.sentence_edge(), cur);
  for (size_t i = 0; i < s.cohorts.size(); ++i) {
    if (i > 0) {
      uint32_t next = n.add_state();
      n.add_edge(cur, syms.word_boundary(), next);
      cur = next;
    }
    const Cohort& c = s.cohorts[i];
    uint32_t join = n.add_state();
    if (c.is_punct) {
      n.add_edge(cur, syms.base(c.display_form), join);
    } else {
      for (const Reading& r : c.readings) {
        auto enc = encode_reading(c, r, syms);
        uint32_t at = cur;
        for (size_t k = 0; k < enc.size(); ++k) {
          uint32_t to = k + 1 == enc.size() ? join : n.add_state();
          n.add_edge(at, enc[k], to);
          at = to;
        }
      }
    }
    cur = join;
  }
  uint32_t accept = n.add_state();
  n.add_edge(cur, syms.sentence_edge(), accept);
  n.states[accept].accept = true;
  return minimize(determinize(n));
}

Dfa intersect_all(const Dfa& sent, const std::vector<Dfa>& rules) {
  std::vector<const Dfa*> order;
  order.reserve(rules.size());
  for (const auto& r : rules) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(), [](const Dfa* a, const Dfa* b) {
    return a->num_states() < b->num_states();
  });
  Dfa acc = sent;
  for (const Dfa* r : order) {
    acc = minimize(product(acc, *r, ProductOp::And));
  }
  return acc;
}

namespace {

// Splits a sentence string at word boundaries; the enclosing @@ markers
// are stripped. Returns one symbol segment per cohort.
std::vector<std::vector<Symbol>> split_word(const std::vector<Symbol>& w,
                                            const SymbolTable& syms) {
  if (w.size() < 2 || w.front() != syms.sentence_edge() ||
      w.back() != syms.sentence_edge()) {
    throw std::runtime_error("parse path lacks sentence-edge markers");
  }
  std::vector<std::vector<Symbol>> segs(1);
  for (size_t i = 1; i + 1 < w.size(); ++i) {
    if (w[i] == syms.word_boundary()) {
      segs.emplace_back();
    } else if (w[i] == syms.sentence_edge()) {
      throw std::runtime_error("unexpected sentence-edge marker inside path");
    } else {
      segs.back().push_back(w[i]);
    }
  }
  return segs;
}

Sentence decode_path(const std::vector<Symbol>& w, const Sentence& source,
                     SymbolTable& syms) {
  auto segs = split_word(w, syms);
  if (segs.size() != source.cohorts.size()) {
    throw std::runtime_error("parse path has " + std::to_string(segs.size()) +
                             " words, sentence has " +
                             std::to_string(source.cohorts.size()));
  }
  Sentence out;
  for (size_t i = 0; i < segs.size(); ++i) {
    const Cohort& c = source.cohorts[i];
    Cohort copy = c;
    if (c.is_punct) {
      if (segs[i] != std::vector<Symbol>{syms.base(c.display_form)}) {
        throw std::runtime_error("punctuation segment mismatch at word " +
                                 std::to_string(i));
      }
      out.cohorts.push_back(std::move(copy));
      continue;
    }
    const Reading* found = nullptr;
    for (const Reading& r : c.readings) {
      if (encode_reading(c, r, syms) == segs[i]) {
        found = &r;
        break;
      }
    }
    if (!found) {
      throw std::runtime_error("no reading of word " + std::to_string(i) +
                               " matches the parse path");
    }
    copy.readings = {*found};
    out.cohorts.push_back(std::move(copy));
  }
  return out;
}

}  // namespace

std::vector<Sentence> enumerate_parses(const Dfa& a, const Sentence& source,
                                       SymbolTable& syms, size_t limit) {
  auto words = enumerate_language(a, 1u << 20);
  if (!words) {
    throw std::runtime_error(
        "automaton language is not a finite sentence set");
  }
  std::vector<Sentence> out;
  for (const auto& w : *words) {
    if (out.size() >= limit) break;
    out.push_back(decode_path(w, source, syms));
  }
  return out;
}

Penalty Penalty::defaults(SymbolTable& syms, const TagPool& tags,
                          const std::vector<std::string>& rare_symbols) {
  Penalty p;
  // Heuristic-origin analyses lose to lexicon-backed ones.
  for (Symbol s = 0; s < syms.size(); ++s) {
    if (syms.is_base(s)) continue;
    Tag t = tags.find(syms.text(s));
    if (t.valid() && t.kind() == TagKind::HeurFlag) p.weights[s] = 1;
  }
  for (const auto& name : rare_symbols) {
    p.weights[syms.tag(name)] = 1;
  }
  return p;
}

std::optional<Sentence> select_parse(const Dfa& a, const Sentence& source,
                                     SymbolTable& syms, const Penalty& p) {
  auto w = min_cost_word(a, p.weights);
  if (!w) return std::nullopt;
  return decode_path(*w, source, syms);
}

bool rule_holds(const std::vector<Symbol>& w, const FsigRule& rule) {
  if (rule.kind == FsigRule::Kind::Reject) {
    Dfa d = compile_regex(rule.reject);
    return !d.accepts(w);
  }
  const auto& imp = rule.implication;
  Dfa center = compile_regex(imp.center);
  std::vector<Dfa> lefts, rights;
  for (const auto& [l, r] : imp.contexts) {
    lefts.push_back(compile_regex(l));
    rights.push_back(compile_regex(r));
  }
  const size_t n = w.size();
  // Every decomposition w = u x v with x in L(center) needs a context
  // whose left accepts all of u and right accepts all of v.
  for (size_t i = 0; i <= n; ++i) {
    for (size_t j = i; j <= n; ++j) {
      std::vector<Symbol> x(w.begin() + i, w.begin() + j);
      if (!center.accepts(x)) continue;
      std::vector<Symbol> u(w.begin(), w.begin() + i);
      std::vector<Symbol> v(w.begin() + j, w.end());
      bool licensed = false;
      for (size_t k = 0; k < lefts.size(); ++k) {
        if (lefts[k].accepts(u) && rights[k].accepts(v)) {
          licensed = true;
          break;
        }
      }
      if (!licensed) return false;
    }
  }
  return true;
}

std::vector<Sentence> brute_force_filter(const Sentence& s,
                                         const FsigGrammar& g,
                                         SymbolTable& syms, size_t bound) {
  size_t combos = 1;
  for (const auto& c : s.cohorts) {
    size_t n = c.is_punct ? 1 : c.readings.size();
    if (n == 0) throw std::runtime_error("empty cohort");
    if (combos > bound / n) {
      throw std::runtime_error("reading combinations exceed the bound of " +
                               std::to_string(bound));
    }
    combos *= n;
  }

  // Compile each rule's parts once; membership is checked per combination.
  struct CompiledParts {
    const FsigRule* rule;
    Dfa reject_or_center;
    std::vector<std::pair<Dfa, Dfa>> contexts;
  };
  std::vector<CompiledParts> parts;
  for (const auto& rule : g.rules) {
    CompiledParts cp;
    cp.rule = &rule;
    if (rule.kind == FsigRule::Kind::Reject) {
      cp.reject_or_center = compile_regex(rule.reject);
    } else {
      cp.reject_or_center = compile_regex(rule.implication.center);
      for (const auto& [l, r] : rule.implication.contexts) {
        cp.contexts.emplace_back(compile_regex(l), compile_regex(r));
      }
    }
    parts.push_back(std::move(cp));
  }
  auto holds = [&](const std::vector<Symbol>& w, const CompiledParts& cp) {
    if (cp.rule->kind == FsigRule::Kind::Reject) {
      return !cp.reject_or_center.accepts(w);
    }
    const size_t n = w.size();
    for (size_t i = 0; i <= n; ++i) {
      for (size_t j = i; j <= n; ++j) {
        std::vector<Symbol> x(w.begin() + i, w.begin() + j);
        if (!cp.reject_or_center.accepts(x)) continue;
        std::vector<Symbol> u(w.begin(), w.begin() + i);
        std::vector<Symbol> v(w.begin() + j, w.end());
        bool licensed = false;
        for (const auto& [l, r] : cp.contexts) {
          if (l.accepts(u) && r.accepts(v)) {
            licensed = true;
            break;
          }
        }
        if (!licensed) return false;
      }
    }
    return true;
  };

  std::vector<size_t> choice(s.cohorts.size(), 0);
  auto advance = [&]() {
    for (size_t k = choice.size(); k-- > 0;) {
      size_t radix = s.cohorts[k].is_punct ? 1 : s.cohorts[k].readings.size();
      if (++choice[k] < radix) return true;
      choice[k] = 0;
    }
    return false;
  };

  std::vector<std::pair<std::vector<Symbol>, std::vector<size_t>>> kept;
  do {
    std::vector<Symbol> w = encode_choice(s, choice, syms);
    bool ok = true;
    for (const auto& cp : parts) {
      if (!holds(w, cp)) {
        ok = false;
        break;
      }
    }
    if (ok) kept.emplace_back(std::move(w), choice);
  } while (advance());

  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) {
      return a.first.size() < b.first.size();
    }
    return a.first < b.first;
  });
  std::vector<Sentence> out;
  for (const auto& [w, ch] : kept) {
    Sentence single;
    for (size_t i = 0; i < s.cohorts.size(); ++i) {
      Cohort copy = s.cohorts[i];
      if (!copy.is_punct) {
        copy.readings = {s.cohorts[i].readings[ch[i]]};
      }
      single.cohorts.push_back(std::move(copy));
    }
    out.push_back(std::move(single));
  }
  return out;
}

}  // namespace sculpt::fsig
