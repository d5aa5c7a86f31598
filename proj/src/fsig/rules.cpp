// sculpt/fsig/rules.cpp
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

#include "sculpt/fsig/rules.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sculpt::fsig {

namespace {

// Splits `text` at top-level occurrences of a delimiter, respecting
// quotes and bracket depth.
std::vector<std::string> split_top(const std::string& text,
                                   const std::string& delim) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  char quote = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quote) {
      cur += c;
      if (c == quote) quote = 0;
      continue;
    }
    if (c == '"' || c == '\'') {
      quote = c;
      cur += c;
      continue;
    }
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (depth == 0 && text.compare(i, delim.size(), delim) == 0) {
      parts.push_back(cur);
      cur.clear();
      i += delim.size() - 1;
      continue;
    }
    cur += c;
  }
  parts.push_back(cur);
  return parts;
}

std::string strip(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

FsigGrammar parse_fsig_grammar(std::string_view text, SymbolTable& syms) {
  FsigGrammar g;
  // Statements end at ';'. Comments run to end of line.
  std::string cleaned;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      cleaned += line;
      cleaned += '\n';
    }
  }
  int auto_id = 0;
  for (const std::string& raw : split_top(cleaned, ";")) {
    std::string stmt = strip(raw);
    if (stmt.empty()) continue;
    if (stmt.rfind("DEF", 0) == 0) {
      std::string rest = strip(stmt.substr(3));
      auto eq = rest.find('=');
      if (eq == std::string::npos) {
        throw std::runtime_error("DEF without '=': " + stmt);
      }
      std::string name = strip(rest.substr(0, eq));
      if (name.empty()) throw std::runtime_error("DEF without a name");
      if (g.defs.count(name)) {
        throw std::runtime_error("duplicate DEF " + name);
      }
      g.defs[name] = parse_regex(rest.substr(eq + 1), syms, g.defs);
    } else if (stmt.rfind("RULE", 0) == 0) {
      std::string rest = strip(stmt.substr(4));
      std::string name;
      if (!rest.empty() && rest[0] == '"') {
        auto close = rest.find('"', 1);
        if (close == std::string::npos) {
          throw std::runtime_error("unterminated rule name: " + stmt);
        }
        name = rest.substr(1, close - 1);
        rest = strip(rest.substr(close + 1));
      }
      if (!rest.empty() && rest[0] == ':') rest = strip(rest.substr(1));
      if (name.empty()) name = "rule" + std::to_string(++auto_id);
      auto arrow = split_top(rest, "=>");
      if (arrow.size() != 2) {
        throw std::runtime_error("RULE needs exactly one '=>': " + stmt);
      }
      FsigRule rule;
      rule.kind = FsigRule::Kind::Implication;
      rule.name = name;
      rule.implication.name = name;
      rule.implication.center = parse_regex(strip(arrow[0]), syms, g.defs);
      for (const std::string& ctx : split_top(arrow[1], ",")) {
        auto sides = split_top(ctx, "_");
        if (sides.size() != 2) {
          throw std::runtime_error("context needs exactly one '_': " + ctx);
        }
        std::string lc = strip(sides[0]);
        std::string rc = strip(sides[1]);
        RegexPtr left = lc.empty() ? rx_sigma_star()
                                   : parse_regex(lc, syms, g.defs);
        RegexPtr right = rc.empty() ? rx_sigma_star()
                                    : parse_regex(rc, syms, g.defs);
        rule.implication.contexts.emplace_back(std::move(left),
                                               std::move(right));
      }
      if (rule.implication.contexts.empty()) {
        throw std::runtime_error("RULE without contexts: " + stmt);
      }
      g.rules.push_back(std::move(rule));
    } else if (stmt.rfind("REJECT", 0) == 0) {
      FsigRule rule;
      rule.kind = FsigRule::Kind::Reject;
      rule.name = "reject" + std::to_string(++auto_id);
      rule.reject = parse_regex(stmt.substr(6), syms, g.defs);
      g.rules.push_back(std::move(rule));
    } else {
      throw std::runtime_error("unknown statement: " + stmt);
    }
  }
  return g;
}

FsigGrammar load_fsig_grammar(const std::string& path, SymbolTable& syms) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open rule file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_fsig_grammar(ss.str(), syms);
}

Dfa compile_implication(const ImplicationRule& rule) {
  const size_t n = rule.contexts.size();
  if (n > 12) {
    throw std::runtime_error(
        "rule " + rule.name + ": " + std::to_string(n) +
        " contexts; the construction enumerates 2^n terms (limit 12)");
  }
  Dfa center = compile_regex(rule.center);
  std::vector<Dfa> not_left, not_right;
  not_left.reserve(n);
  not_right.reserve(n);
  for (const auto& [l, r] : rule.contexts) {
    not_left.push_back(complement(compile_regex(l)));
    not_right.push_back(complement(compile_regex(r)));
  }

  Dfa universal = compile_regex(rx_sigma_star());
  Dfa bad = complement(universal);  // start from the empty language
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    // f(i) = L when bit i is set: the occurrence fails context i on the
    // left side; otherwise on the right side.
    Dfa a = universal;
    Dfa b = universal;
    for (size_t i = 0; i < n; ++i) {
      if (mask & (size_t{1} << i)) {
        a = minimize(product(a, not_left[i], ProductOp::And));
      } else {
        b = minimize(product(b, not_right[i], ProductOp::And));
      }
    }
    // a . center . b
    Nfa chain = Nfa::from_dfa(a);
    {
      Nfa mid = Nfa::from_dfa(center);
      Nfa tail = Nfa::from_dfa(b);
      // Glue sequentially with epsilon transitions.
      auto append = [&](Nfa& dst, const Nfa& src) {
        dst.lift(src.named);
        Nfa lifted = src;
        lifted.lift(dst.named);
        uint32_t off = static_cast<uint32_t>(dst.states.size());
        for (const auto& st : lifted.states) {
          Nfa::State copy;
          copy.accept = st.accept;
          for (const auto& e : st.edges) {
            copy.edges.push_back(Nfa::Edge{e.any_other, e.sym, e.to + off});
          }
          for (uint32_t t : st.eps) copy.eps.push_back(t + off);
          dst.states.push_back(std::move(copy));
        }
        dst.named.insert(lifted.named.begin(), lifted.named.end());
        // Old accepts feed the appended start; they stop accepting.
        for (uint32_t i = 0; i < off; ++i) {
          if (dst.states[i].accept) {
            dst.states[i].accept = false;
            dst.add_eps(i, lifted.start + off);
          }
        }
      };
      append(chain, mid);
      append(chain, tail);
    }
    Dfa term = minimize(determinize(chain));
    bad = minimize(product(bad, term, ProductOp::Or));
  }
  return minimize(complement(bad));
}

Dfa compile_rule(const FsigRule& rule) {
  if (rule.kind == FsigRule::Kind::Implication) {
    return compile_implication(rule.implication);
  }
  return minimize(complement(compile_regex(rule.reject)));
}

}  // namespace sculpt::fsig
