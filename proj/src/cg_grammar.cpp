// sculpt/cg_grammar.cpp
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

#include "sculpt/cg_grammar.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "sculpt/cohort_io.hpp"

namespace sculpt {

bool PatternConj::matches(const Reading& r) const {
  if (any) return true;
  if (base && *base != r.base) return false;
  for (Tag t : tags) {
    if (!r.has_tag(t)) return false;
  }
  return true;
}

bool Pattern::matches(const Reading& r) const {
  for (const auto& alt : alternatives) {
    if (alt.matches(r)) return true;
  }
  return false;
}

bool Pattern::matches_any(const Cohort& c) const {
  for (const auto& r : c.readings) {
    if (matches(r)) return true;
  }
  return false;
}

const Constraint* CgGrammar::find(const std::string& id) const {
  for (const auto& k : strict) {
    if (k.id == id) return &k;
  }
  for (const auto& k : heuristic) {
    if (k.id == id) return &k;
  }
  return nullptr;
}

namespace {

struct Token {
  enum Kind { Atom, Str, LParen, RParen, Semi, Pipe, Eof } kind;
  std::string text;
  int line, col;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(tok_.line, tok_.col, msg);
  }

private:
  void advance() {
    skip();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_ = {Token::Eof, "", line_, col_};
      return;
    }
    char c = text_[pos_];
    if (c == '(') { get(); tok_.kind = Token::LParen; tok_.text = "("; return; }
    if (c == ')') { get(); tok_.kind = Token::RParen; tok_.text = ")"; return; }
    if (c == ';') { get(); tok_.kind = Token::Semi; tok_.text = ";"; return; }
    if (c == '|') { get(); tok_.kind = Token::Pipe; tok_.text = "|"; return; }
    if (c == '"') {
      get();
      std::string out;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\n') throw ParseError(line_, col_, "unterminated string");
        out += get();
      }
      if (pos_ >= text_.size()) throw ParseError(line_, col_, "unterminated string");
      get();
      tok_.kind = Token::Str;
      tok_.text = out;
      return;
    }
    std::string out;
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' ||
          d == ';' || d == '|' || d == '"' || d == '#') {
        break;
      }
      out += get();
    }
    tok_.kind = Token::Atom;
    tok_.text = out;
  }

  void skip() {
    for (;;) {
      while (pos_ < text_.size() &&
             std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        get();
      }
      if (pos_ < text_.size() && text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') get();
        continue;
      }
      break;
    }
  }

  char get() {
    char c = text_[pos_++];
    if (c == '\n') { ++line_; col_ = 1; } else { ++col_; }
    return c;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_{Token::Eof, "", 1, 1};
};

class GrammarParser {
public:
  GrammarParser(std::string_view text, TagPool& pool)
      : lex_(text), pool_(pool) {}

  CgGrammar parse() {
    CgGrammar g;
    Tier tier = Tier::Strict;
    int auto_id = 0;
    std::set<std::string> ids;
    while (lex_.peek().kind != Token::Eof) {
      Token t = lex_.take();
      if (t.kind != Token::Atom) {
        throw ParseError(t.line, t.col, "expected directive, got '" + t.text + "'");
      }
      std::string label;
      if (t.text.size() > 1 && t.text.back() == ':') {
        label = t.text.substr(0, t.text.size() - 1);
        t = lex_.take();
        if (t.kind != Token::Atom) {
          throw ParseError(t.line, t.col, "expected rule after label");
        }
      }
      if (t.text == "DELIMITERS") {
        g.delimiters.clear();
        while (lex_.peek().kind == Token::Str) {
          std::string d = lex_.take().text;
          if (d.size() >= 2 && d.front() == '<' && d.back() == '>') {
            d = d.substr(1, d.size() - 2);
          }
          g.delimiters.insert(d);
        }
        expect_semi();
      } else if (t.text == "SECTION") {
        Token name = lex_.take();
        if (name.text == "strict") {
          tier = Tier::Strict;
        } else if (name.text == "heuristic") {
          tier = Tier::Heuristic;
        } else {
          throw ParseError(name.line, name.col,
                           "unknown section '" + name.text + "'");
        }
        expect_semi();
      } else if (t.text == "REMOVE" || t.text == "SELECT") {
        Constraint k;
        k.op = t.text == "REMOVE" ? ConstraintOp::Remove : ConstraintOp::Select;
        k.tier = tier;
        k.id = label.empty()
                   ? (tier == Tier::Strict ? "s" : "h") + std::to_string(++auto_id)
                   : label;
        if (!ids.insert(k.id).second) {
          throw ParseError(t.line, t.col, "duplicate rule id '" + k.id + "'");
        }
        k.target = parse_pattern();
        if (lex_.peek().kind == Token::Atom && lex_.peek().text == "IF") {
          lex_.take();
          while (lex_.peek().kind == Token::LParen) {
            k.conditions.push_back(parse_condition());
          }
        }
        expect_semi();
        (tier == Tier::Strict ? g.strict : g.heuristic).push_back(std::move(k));
      } else if (t.text == "MAP") {
        MappingRule m;
        Pattern add = parse_pattern();
        if (add.alternatives.size() != 1 || add.alternatives[0].any ||
            add.alternatives[0].base) {
          throw ParseError(t.line, t.col, "MAP tag set must be plain tags");
        }
        m.add = add.alternatives[0].tags;
        if (m.add.empty()) {
          throw ParseError(t.line, t.col, "MAP tag set is empty");
        }
        for (Tag tag : m.add) {
          if (tag.kind() != TagKind::SynFunc) {
            throw ParseError(t.line, t.col,
                             "MAP adds non-function tag " + tag.text());
          }
        }
        Token kw = lex_.take();
        if (kw.kind != Token::Atom || kw.text != "TARGET") {
          throw ParseError(kw.line, kw.col, "expected TARGET");
        }
        m.target = parse_pattern();
        if (lex_.peek().kind == Token::Atom && lex_.peek().text == "IF") {
          lex_.take();
          while (lex_.peek().kind == Token::LParen) {
            m.context.push_back(parse_condition());
          }
        }
        expect_semi();
        g.mappings.push_back(std::move(m));
      } else {
        throw ParseError(t.line, t.col, "unknown directive '" + t.text + "'");
      }
    }
    return g;
  }

private:
  void expect_semi() {
    Token t = lex_.take();
    if (t.kind != Token::Semi) {
      throw ParseError(t.line, t.col, "expected ';'");
    }
  }

  // ( CONJ | CONJ | ... ) where CONJ is tags and/or a "base" literal, or *.
  Pattern parse_pattern() {
    Token open = lex_.take();
    if (open.kind != Token::LParen) {
      throw ParseError(open.line, open.col, "expected '('");
    }
    Pattern p;
    PatternConj conj;
    bool saw_any_member = false;
    for (;;) {
      Token t = lex_.take();
      if (t.kind == Token::RParen) {
        if (!saw_any_member) {
          throw ParseError(t.line, t.col, "empty pattern alternative");
        }
        p.alternatives.push_back(std::move(conj));
        break;
      }
      if (t.kind == Token::Pipe) {
        if (!saw_any_member) {
          throw ParseError(t.line, t.col, "empty pattern alternative");
        }
        p.alternatives.push_back(std::move(conj));
        conj = PatternConj{};
        saw_any_member = false;
        continue;
      }
      if (t.kind == Token::Str) {
        conj.base = t.text;
        saw_any_member = true;
        continue;
      }
      if (t.kind == Token::Atom) {
        if (t.text == "*") {
          conj.any = true;
        } else {
          conj.tags.push_back(pool_.intern(t.text));
        }
        saw_any_member = true;
        continue;
      }
      throw ParseError(t.line, t.col, "unexpected token in pattern");
    }
    return p;
  }

  // ( [NOT] [*]OFFSET[C] PATTERN [BARRIER PATTERN] )
  ContextCondition parse_condition() {
    Token open = lex_.take();
    if (open.kind != Token::LParen) {
      throw ParseError(open.line, open.col, "expected '('");
    }
    ContextCondition c;
    Token t = lex_.take();
    if (t.kind == Token::Atom && t.text == "NOT") {
      c.negated = true;
      t = lex_.take();
    }
    if (t.kind != Token::Atom) {
      throw ParseError(t.line, t.col, "expected position");
    }
    std::string pos = t.text;
    if (!pos.empty() && pos.front() == '*') {
      c.scan = true;
      pos.erase(pos.begin());
    }
    if (!pos.empty() && (pos.back() == 'C' || pos.back() == 'c')) {
      c.careful = true;
      pos.pop_back();
    }
    try {
      size_t used = 0;
      c.offset = std::stoi(pos, &used);
      if (used != pos.size()) throw std::invalid_argument(pos);
    } catch (...) {
      throw ParseError(t.line, t.col, "bad position '" + t.text + "'");
    }
    if (c.scan && c.offset == 0) {
      throw ParseError(t.line, t.col, "scan requires a nonzero offset");
    }
    c.pattern = parse_pattern();
    if (lex_.peek().kind == Token::Atom && lex_.peek().text == "BARRIER") {
      Token b = lex_.take();
      if (!c.scan) {
        throw ParseError(b.line, b.col, "BARRIER requires a scanning position");
      }
      c.barrier = parse_pattern();
    }
    Token close = lex_.take();
    if (close.kind != Token::RParen) {
      throw ParseError(close.line, close.col, "expected ')' after condition");
    }
    return c;
  }

  Lexer lex_;
  TagPool& pool_;
};

std::string print_pattern(const Pattern& p) {
  std::string out = "(";
  for (size_t i = 0; i < p.alternatives.size(); ++i) {
    if (i) out += " | ";
    const auto& alt = p.alternatives[i];
    bool first = true;
    if (alt.any) {
      out += '*';
      first = false;
    }
    if (alt.base) {
      out += '"' + *alt.base + '"';
      first = false;
    }
    for (Tag t : alt.tags) {
      if (!first) out += ' ';
      out += t.text();
      first = false;
    }
  }
  out += ')';
  return out;
}

std::string print_condition(const ContextCondition& c) {
  std::string out = "(";
  if (c.negated) out += "NOT ";
  if (c.scan) out += '*';
  out += std::to_string(c.offset);
  if (c.careful) out += 'C';
  out += ' ';
  out += print_pattern(c.pattern);
  if (c.barrier) {
    out += " BARRIER ";
    out += print_pattern(*c.barrier);
  }
  out += ')';
  return out;
}

std::string print_constraint(const Constraint& k) {
  std::string out = k.id + ": ";
  out += k.op == ConstraintOp::Remove ? "REMOVE " : "SELECT ";
  out += print_pattern(k.target);
  if (!k.conditions.empty()) {
    out += " IF";
    for (const auto& c : k.conditions) {
      out += ' ';
      out += print_condition(c);
    }
  }
  out += " ;";
  return out;
}

void collect_pattern_tags(const Pattern& p, std::vector<Tag>* out) {
  for (const auto& alt : p.alternatives) {
    out->insert(out->end(), alt.tags.begin(), alt.tags.end());
  }
}

}  // namespace

CgGrammar parse_cg_grammar(std::string_view text, TagPool& pool) {
  return GrammarParser(text, pool).parse();
}

CgGrammar load_cg_grammar(const std::string& path, TagPool& pool) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open grammar file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_cg_grammar(ss.str(), pool);
}

std::string print_cg_grammar(const CgGrammar& g) {
  std::string out = "DELIMITERS";
  for (const auto& d : g.delimiters) {
    out += " \"<" + d + ">\"";
  }
  out += " ;\n";
  out += "SECTION strict ;\n";
  for (const auto& k : g.strict) {
    out += print_constraint(k);
    out += '\n';
  }
  for (const auto& m : g.mappings) {
    std::string tags;
    for (Tag t : m.add) {
      if (!tags.empty()) tags += ' ';
      tags += t.text();
    }
    out += "MAP (" + tags + ") TARGET " + print_pattern(m.target);
    if (!m.context.empty()) {
      out += " IF";
      for (const auto& c : m.context) {
        out += ' ';
        out += print_condition(c);
      }
    }
    out += " ;\n";
  }
  if (!g.heuristic.empty()) {
    out += "SECTION heuristic ;\n";
    for (const auto& k : g.heuristic) {
      out += print_constraint(k);
      out += '\n';
    }
  }
  return out;
}

std::vector<std::string> validate_cg_grammar(const CgGrammar& g,
                                             const TagPool& pool) {
  std::vector<std::string> diags;
  (void)pool;

  auto check_tags = [&](const std::string& where, const Pattern& p) {
    std::vector<Tag> tags;
    collect_pattern_tags(p, &tags);
    for (Tag t : tags) {
      if (!t.registered()) {
        diags.push_back(where + ": tag " + t.text() +
                        " is not declared in the tagset");
      }
    }
  };
  auto barrier_unreachable = [&](const Pattern& p) {
    for (const auto& alt : p.alternatives) {
      bool all_unknown = !alt.tags.empty();
      for (Tag t : alt.tags) {
        if (t.registered()) all_unknown = false;
      }
      if (!all_unknown) return false;  // some alternative can match
    }
    return !p.alternatives.empty();
  };

  auto scan_constraints = [&](const std::vector<Constraint>& ks) {
    for (const auto& k : ks) {
      check_tags("rule " + k.id, k.target);
      for (const auto& c : k.conditions) {
        check_tags("rule " + k.id, c.pattern);
        if (c.barrier) {
          check_tags("rule " + k.id, *c.barrier);
          if (barrier_unreachable(*c.barrier)) {
            diags.push_back("rule " + k.id + ": barrier can never match");
          }
        }
      }
    }
  };
  scan_constraints(g.strict);
  scan_constraints(g.heuristic);
  for (const auto& m : g.mappings) {
    check_tags("mapping", m.target);
    for (const auto& c : m.context) check_tags("mapping", c.pattern);
  }

  // A REMOVE and a SELECT with the same target and context contradict each
  // other: one keeps exactly what the other discards.
  auto all = [&]() {
    std::vector<const Constraint*> v;
    for (const auto& k : g.strict) v.push_back(&k);
    for (const auto& k : g.heuristic) v.push_back(&k);
    return v;
  }();
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = i + 1; j < all.size(); ++j) {
      if (all[i]->op == all[j]->op) continue;
      if (all[i]->target == all[j]->target &&
          all[i]->conditions == all[j]->conditions) {
        diags.push_back("rules " + all[i]->id + " and " + all[j]->id +
                        " contradict: SELECT and REMOVE share target and context");
      }
    }
  }
  return diags;
}

}  // namespace sculpt
