// sculpt/fsig/automaton.cpp
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

#include "sculpt/fsig/automaton.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>

namespace sculpt::fsig {

bool Dfa::accepts(const std::vector<Symbol>& word) const {
  uint32_t s = 0;
  for (Symbol x : word) s = step(s, x);
  return states[s].accept;
}

uint32_t Nfa::add_state() {
  states.emplace_back();
  return static_cast<uint32_t>(states.size() - 1);
}

void Nfa::add_edge(uint32_t from, Symbol s, uint32_t to) {
  states[from].edges.push_back(Edge{false, s, to});
  named.insert(s);
}

void Nfa::add_any_other(uint32_t from, uint32_t to) {
  states[from].edges.push_back(Edge{true, 0, to});
}

void Nfa::add_eps(uint32_t from, uint32_t to) {
  states[from].eps.push_back(to);
}

void Nfa::lift(const std::set<Symbol>& extra) {
  std::vector<Symbol> fresh;
  for (Symbol s : extra) {
    if (named.insert(s).second) fresh.push_back(s);
  }
  if (fresh.empty()) return;
  for (auto& st : states) {
    size_t n = st.edges.size();
    for (size_t i = 0; i < n; ++i) {
      if (!st.edges[i].any_other) continue;
      for (Symbol s : fresh) {
        st.edges.push_back(Edge{false, s, st.edges[i].to});
      }
    }
  }
}

Nfa Nfa::from_dfa(const Dfa& d) {
  Nfa n;
  n.named = d.named;
  n.states.resize(d.states.size());
  for (size_t i = 0; i < d.states.size(); ++i) {
    n.states[i].accept = d.states[i].accept;
    for (const auto& [sym, to] : d.states[i].edges) {
      n.states[i].edges.push_back(Edge{false, sym, to});
    }
    n.states[i].edges.push_back(Edge{true, 0, d.states[i].other});
  }
  n.start = 0;
  return n;
}

namespace {

using StateSet = std::vector<uint32_t>;  // sorted unique

void eps_closure(const Nfa& n, StateSet& set) {
  std::vector<uint32_t> work(set.begin(), set.end());
  std::set<uint32_t> seen(set.begin(), set.end());
  while (!work.empty()) {
    uint32_t s = work.back();
    work.pop_back();
    for (uint32_t t : n.states[s].eps) {
      if (seen.insert(t).second) work.push_back(t);
    }
  }
  set.assign(seen.begin(), seen.end());
}

}  // namespace

Dfa determinize(const Nfa& n) {
  Dfa d;
  d.named = n.named;

  std::map<StateSet, uint32_t> ids;
  std::vector<StateSet> sets;
  auto get_id = [&](StateSet s) {
    eps_closure(n, s);
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(sets.size());
    ids.emplace(s, id);
    sets.push_back(std::move(s));
    d.states.emplace_back();
    return id;
  };

  uint32_t start = get_id({n.start});
  (void)start;  // start is id 0 by construction

  for (uint32_t cur = 0; cur < sets.size(); ++cur) {
    StateSet set = sets[cur];  // copy: sets grows as we add states
    bool accept = false;
    for (uint32_t s : set) accept = accept || n.states[s].accept;
    d.states[cur].accept = accept;

    // Explicit symbols.
    for (Symbol x : n.named) {
      std::set<uint32_t> next;
      for (uint32_t s : set) {
        for (const auto& e : n.states[s].edges) {
          if (!e.any_other && e.sym == x) next.insert(e.to);
        }
      }
      uint32_t id = get_id(StateSet(next.begin(), next.end()));
      d.states[cur].edges[x] = id;
    }
    // Everything the automaton does not name.
    {
      std::set<uint32_t> next;
      for (uint32_t s : set) {
        for (const auto& e : n.states[s].edges) {
          if (e.any_other) next.insert(e.to);
        }
      }
      uint32_t id = get_id(StateSet(next.begin(), next.end()));
      d.states[cur].other = id;
    }
  }
  return d;
}

Dfa minimize(const Dfa& din) {
  // Drop named symbols whose column equals the other-column everywhere.
  Dfa d = din;
  for (auto it = d.named.begin(); it != d.named.end();) {
    Symbol x = *it;
    bool redundant = true;
    for (const auto& st : d.states) {
      if (st.edges.count(x) && st.edges.at(x) != st.other) {
        redundant = false;
        break;
      }
    }
    if (redundant) {
      for (auto& st : d.states) st.edges.erase(x);
      it = d.named.erase(it);
    } else {
      ++it;
    }
  }

  const size_t n = d.states.size();
  std::vector<uint32_t> cls(n);
  for (size_t i = 0; i < n; ++i) cls[i] = d.states[i].accept ? 1 : 0;

  std::vector<Symbol> alpha(d.named.begin(), d.named.end());
  for (;;) {
    std::map<std::vector<uint32_t>, uint32_t> sig_ids;
    std::vector<uint32_t> next(n);
    for (size_t i = 0; i < n; ++i) {
      std::vector<uint32_t> sig;
      sig.reserve(alpha.size() + 2);
      sig.push_back(cls[i]);
      for (Symbol x : alpha) {
        sig.push_back(cls[d.step(static_cast<uint32_t>(i), x)]);
      }
      sig.push_back(cls[d.states[i].other]);
      auto it = sig_ids.find(sig);
      if (it == sig_ids.end()) {
        it = sig_ids.emplace(std::move(sig),
                             static_cast<uint32_t>(sig_ids.size())).first;
      }
      next[i] = it->second;
    }
    if (next == cls) break;
    cls = std::move(next);
  }

  // Rebuild with BFS numbering from the start class for a stable layout.
  std::map<uint32_t, uint32_t> renumber;
  std::vector<uint32_t> rep;  // representative old state per new id
  std::queue<uint32_t> work;
  auto visit = [&](uint32_t old_state) {
    uint32_t c = cls[old_state];
    auto it = renumber.find(c);
    if (it != renumber.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(rep.size());
    renumber.emplace(c, id);
    rep.push_back(old_state);
    work.push(old_state);
    return id;
  };
  Dfa out;
  out.named = d.named;
  visit(0);
  while (!work.empty()) {
    uint32_t s = work.front();
    work.pop();
    out.states.emplace_back();
    uint32_t id = renumber[cls[s]];
    (void)id;
    for (Symbol x : alpha) visit(d.step(s, x));
    visit(d.states[s].other);
  }
  out.states.resize(rep.size());
  for (uint32_t id = 0; id < rep.size(); ++id) {
    uint32_t s = rep[id];
    out.states[id].accept = d.states[s].accept;
    out.states[id].other = renumber[cls[d.states[s].other]];
    for (Symbol x : alpha) {
      uint32_t t = renumber[cls[d.step(s, x)]];
      if (t != out.states[id].other) out.states[id].edges[x] = t;
    }
  }
  // Tighten named: symbols may have become uniformly redundant again.
  for (auto it = out.named.begin(); it != out.named.end();) {
    bool used = false;
    for (const auto& st : out.states) {
      if (st.edges.count(*it)) {
        used = true;
        break;
      }
    }
    it = used ? std::next(it) : out.named.erase(it);
  }
  return out;
}

Dfa complement(const Dfa& d) {
  Dfa out = d;
  for (auto& st : out.states) st.accept = !st.accept;
  return out;
}

Dfa product(const Dfa& a, const Dfa& b, ProductOp op) {
  Dfa out;
  out.named = a.named;
  out.named.insert(b.named.begin(), b.named.end());
  std::vector<Symbol> alpha(out.named.begin(), out.named.end());

  std::map<std::pair<uint32_t, uint32_t>, uint32_t> ids;
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  auto get_id = [&](uint32_t x, uint32_t y) {
    auto key = std::make_pair(x, y);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(pairs.size());
    ids.emplace(key, id);
    pairs.push_back(key);
    out.states.emplace_back();
    return id;
  };
  auto accept_of = [&](uint32_t x, uint32_t y) {
    bool pa = a.states[x].accept, pb = b.states[y].accept;
    switch (op) {
      case ProductOp::And: return pa && pb;
      case ProductOp::Or: return pa || pb;
      case ProductOp::Diff: return pa && !pb;
    }
    return false;
  };

  get_id(0, 0);
  for (uint32_t cur = 0; cur < pairs.size(); ++cur) {
    auto [x, y] = pairs[cur];
    out.states[cur].accept = accept_of(x, y);
    for (Symbol s : alpha) {
      out.states[cur].edges[s] = get_id(a.step(x, s), b.step(y, s));
    }
    out.states[cur].other = get_id(a.states[x].other, b.states[y].other);
    // Re-read edges map is fine: get_id only appends.
  }
  // Drop explicit edges equal to other.
  for (auto& st : out.states) {
    for (auto it = st.edges.begin(); it != st.edges.end();) {
      it = it->second == st.other ? st.edges.erase(it) : std::next(it);
    }
  }
  return out;
}

bool is_empty(const Dfa& d) {
  std::vector<char> seen(d.states.size(), 0);
  std::queue<uint32_t> work;
  work.push(0);
  seen[0] = 1;
  while (!work.empty()) {
    uint32_t s = work.front();
    work.pop();
    if (d.states[s].accept) return false;
    auto push = [&](uint32_t t) {
      if (!seen[t]) {
        seen[t] = 1;
        work.push(t);
      }
    };
    for (const auto& [sym, t] : d.states[s].edges) push(t);
    push(d.states[s].other);
  }
  return true;
}

bool equivalent(const Dfa& a, const Dfa& b) {
  return is_empty(product(a, b, ProductOp::Diff)) &&
         is_empty(product(b, a, ProductOp::Diff));
}

namespace {

// States on some path from start to an accept state, considering explicit
// edges and other-edges alike. Also reports whether an other-edge sits on
// such a path (open-alphabet language: not enumerable).
struct Trimmed {
  std::vector<char> live;
  bool other_on_path = false;
};

Trimmed trim(const Dfa& d) {
  const size_t n = d.states.size();
  std::vector<char> fwd(n, 0);
  std::queue<uint32_t> work;
  work.push(0);
  fwd[0] = 1;
  while (!work.empty()) {
    uint32_t s = work.front();
    work.pop();
    auto push = [&](uint32_t t) {
      if (!fwd[t]) {
        fwd[t] = 1;
        work.push(t);
      }
    };
    for (const auto& [sym, t] : d.states[s].edges) push(t);
    push(d.states[s].other);
  }
  // Backward reachability from accept states.
  std::vector<std::vector<uint32_t>> rev(n);
  for (uint32_t s = 0; s < n; ++s) {
    for (const auto& [sym, t] : d.states[s].edges) rev[t].push_back(s);
    rev[d.states[s].other].push_back(s);
  }
  std::vector<char> bwd(n, 0);
  for (uint32_t s = 0; s < n; ++s) {
    if (d.states[s].accept && !bwd[s]) {
      bwd[s] = 1;
      work.push(s);
    }
  }
  while (!work.empty()) {
    uint32_t s = work.front();
    work.pop();
    for (uint32_t p : rev[s]) {
      if (!bwd[p]) {
        bwd[p] = 1;
        work.push(p);
      }
    }
  }
  Trimmed t;
  t.live.resize(n, 0);
  for (uint32_t s = 0; s < n; ++s) t.live[s] = fwd[s] && bwd[s];
  for (uint32_t s = 0; s < n; ++s) {
    if (t.live[s] && t.live[d.states[s].other]) t.other_on_path = true;
  }
  return t;
}

// DFS cycle check over live explicit edges.
bool has_cycle(const Dfa& d, const std::vector<char>& live) {
  std::vector<int> color(d.states.size(), 0);
  std::function<bool(uint32_t)> dfs = [&](uint32_t s) {
    color[s] = 1;
    for (const auto& [sym, t] : d.states[s].edges) {
      if (!live[t]) continue;
      if (color[t] == 1) return true;
      if (color[t] == 0 && dfs(t)) return true;
    }
    color[s] = 2;
    return false;
  };
  for (uint32_t s = 0; s < d.states.size(); ++s) {
    if (live[s] && color[s] == 0 && dfs(s)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::vector<Symbol>>> enumerate_language(
    const Dfa& d, size_t cap) {
  Trimmed t = trim(d);
  if (!t.live[0]) return std::vector<std::vector<Symbol>>{};  // empty language
  if (t.other_on_path) return std::nullopt;
  if (has_cycle(d, t.live)) return std::nullopt;

  std::vector<std::vector<Symbol>> out;
  std::vector<Symbol> word;
  bool overflow = false;
  std::function<void(uint32_t)> dfs = [&](uint32_t s) {
    if (overflow) return;
    if (d.states[s].accept) {
      out.push_back(word);
      if (out.size() > cap) {
        overflow = true;
        return;
      }
    }
    for (const auto& [sym, tgt] : d.states[s].edges) {
      if (!t.live[tgt]) continue;
      word.push_back(sym);
      dfs(tgt);
      word.pop_back();
    }
  };
  dfs(0);
  if (overflow) return std::nullopt;
  std::sort(out.begin(), out.end(),
            [](const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

std::optional<size_t> count_language(const Dfa& d) {
  Trimmed t = trim(d);
  if (!t.live[0]) return 0;
  if (t.other_on_path) return std::nullopt;
  if (has_cycle(d, t.live)) return std::nullopt;

  std::vector<int64_t> memo(d.states.size(), -1);
  std::function<int64_t(uint32_t)> count = [&](uint32_t s) -> int64_t {
    if (memo[s] >= 0) return memo[s];
    int64_t n = d.states[s].accept ? 1 : 0;
    for (const auto& [sym, tgt] : d.states[s].edges) {
      if (t.live[tgt]) n += count(tgt);
    }
    return memo[s] = n;
  };
  return static_cast<size_t>(count(0));
}

std::optional<std::vector<Symbol>> min_cost_word(
    const Dfa& d, const std::map<Symbol, int>& weights) {
  Trimmed t = trim(d);
  if (!t.live[0]) return std::nullopt;
  if (t.other_on_path || has_cycle(d, t.live)) return std::nullopt;

  auto cost_of = [&](Symbol s) {
    auto it = weights.find(s);
    return it == weights.end() ? 0 : it->second;
  };
  struct Best {
    long cost = 0;
    std::vector<Symbol> word;
    bool valid = false;
  };
  auto better = [](const Best& a, const Best& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  };
  std::vector<Best> memo(d.states.size());
  std::vector<char> done(d.states.size(), 0);
  std::function<const Best&(uint32_t)> best = [&](uint32_t s) -> const Best& {
    if (done[s]) return memo[s];
    done[s] = 1;
    Best b;
    if (d.states[s].accept) {
      b.valid = true;  // empty suffix
    }
    for (const auto& [sym, tgt] : d.states[s].edges) {
      if (!t.live[tgt]) continue;
      const Best& sub = best(tgt);
      if (!sub.valid) continue;
      Best cand;
      cand.valid = true;
      cand.cost = sub.cost + cost_of(sym);
      cand.word.reserve(sub.word.size() + 1);
      cand.word.push_back(sym);
      cand.word.insert(cand.word.end(), sub.word.begin(), sub.word.end());
      if (!b.valid || better(cand, b)) b = std::move(cand);
    }
    memo[s] = std::move(b);
    return memo[s];
  };
  const Best& b = best(0);
  if (!b.valid) return std::nullopt;
  return b.word;
}

}  // namespace sculpt::fsig
