// sculpt/fsig/regex.cpp
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

#include "sculpt/fsig/regex.hpp"

#include <cctype>
#include <stdexcept>

namespace sculpt::fsig {

namespace {

RegexPtr make(Regex::Kind kind, Symbol sym, std::vector<RegexPtr> kids) {
  auto r = std::make_shared<Regex>();
  r->kind = kind;
  r->sym = sym;
  r->kids = std::move(kids);
  return r;
}

}  // namespace

RegexPtr rx_epsilon() { return make(Regex::Kind::Epsilon, 0, {}); }
RegexPtr rx_literal(Symbol s) { return make(Regex::Kind::Literal, s, {}); }
RegexPtr rx_any() { return make(Regex::Kind::Any, 0, {}); }

RegexPtr rx_concat(std::vector<RegexPtr> kids) {
  if (kids.empty()) return rx_epsilon();
  if (kids.size() == 1) return kids[0];
  return make(Regex::Kind::Concat, 0, std::move(kids));
}

RegexPtr rx_union(std::vector<RegexPtr> kids) {
  if (kids.empty()) throw std::invalid_argument("empty union");
  if (kids.size() == 1) return kids[0];
  return make(Regex::Kind::Union, 0, std::move(kids));
}

RegexPtr rx_inter(RegexPtr a, RegexPtr b) {
  return make(Regex::Kind::Inter, 0, {std::move(a), std::move(b)});
}
RegexPtr rx_diff(RegexPtr a, RegexPtr b) {
  return make(Regex::Kind::Diff, 0, {std::move(a), std::move(b)});
}
RegexPtr rx_compl(RegexPtr a) {
  return make(Regex::Kind::Compl, 0, {std::move(a)});
}
RegexPtr rx_star(RegexPtr a) {
  return make(Regex::Kind::Star, 0, {std::move(a)});
}
RegexPtr rx_plus(RegexPtr a) {
  return make(Regex::Kind::Plus, 0, {std::move(a)});
}
RegexPtr rx_opt(RegexPtr a) {
  return make(Regex::Kind::Opt, 0, {std::move(a)});
}
RegexPtr rx_sigma_star() { return rx_star(rx_any()); }

// ---------------------------------------------------------------------
// Lexer for the rule-file regex syntax.

namespace {

struct RxToken {
  enum Kind {
    Atom,   // tag text or DEF name
    Base,   // "lemma"
    QTag,   // 'text' forced to one tag symbol
    LBrack, RBrack,
    Pipe, Amp, Minus, Tilde, Star, Plus, Quest, Dot,
    End,
  } kind;
  std::string text;
  size_t pos;
};

class RxLexer {
public:
  explicit RxLexer(std::string_view text) : text_(text) { next(); }

  const RxToken& peek() const { return tok_; }
  RxToken take() {
    RxToken t = tok_;
    next();
    return t;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::runtime_error("regex: " + msg + " at offset " +
                             std::to_string(tok_.pos) + " in '" +
                             std::string(text_) + "'");
  }

private:
  void next() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    tok_.pos = pos_;
    if (pos_ >= text_.size()) {
      tok_ = {RxToken::End, "", pos_};
      return;
    }
    char c = text_[pos_];
    auto single = [&](RxToken::Kind k) {
      ++pos_;
      tok_.kind = k;
      tok_.text = std::string(1, c);
    };
    switch (c) {
      case '[': return single(RxToken::LBrack);
      case ']': return single(RxToken::RBrack);
      case '|': return single(RxToken::Pipe);
      case '&': return single(RxToken::Amp);
      case '-': return single(RxToken::Minus);
      case '~': return single(RxToken::Tilde);
      case '*': return single(RxToken::Star);
      case '+': return single(RxToken::Plus);
      case '?': return single(RxToken::Quest);
      case '.': return single(RxToken::Dot);
      default: break;
    }
    if (c == '"' || c == '\'') {
      char quote = c;
      size_t start = ++pos_;
      while (pos_ < text_.size() && text_[pos_] != quote) ++pos_;
      if (pos_ >= text_.size()) {
        throw std::runtime_error("regex: unterminated quote in '" +
                                 std::string(text_) + "'");
      }
      tok_.kind = quote == '"' ? RxToken::Base : RxToken::QTag;
      tok_.text = std::string(text_.substr(start, pos_ - start));
      ++pos_;
      return;
    }
    // Atom. '<...>' runs to the closing '>'; '@...' and plain atoms run
    // over tag-friendly characters.
    size_t start = pos_;
    if (c == '<') {
      while (pos_ < text_.size() && text_[pos_] != '>') ++pos_;
      if (pos_ >= text_.size()) {
        throw std::runtime_error("regex: unterminated '<' tag in '" +
                                 std::string(text_) + "'");
      }
      ++pos_;  // include '>'
    } else {
      auto tagchar = [](char d) {
        return std::isalnum(static_cast<unsigned char>(d)) || d == '@' ||
               d == '+' || d == '-' || d == '/' || d == '<' || d == '>';
      };
      if (!tagchar(c)) {
        throw std::runtime_error(std::string("regex: unexpected character '") +
                                 c + "' in '" + std::string(text_) + "'");
      }
      while (pos_ < text_.size() && tagchar(text_[pos_])) ++pos_;
    }
    tok_.kind = RxToken::Atom;
    tok_.text = std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  size_t pos_ = 0;
  RxToken tok_{RxToken::End, "", 0};
};

class RxParser {
public:
  RxParser(std::string_view text, SymbolTable& syms,
           const std::map<std::string, RegexPtr>& defs)
      : lex_(text), syms_(syms), defs_(defs) {}

  RegexPtr parse() {
    RegexPtr r = expr();
    if (lex_.peek().kind != RxToken::End) lex_.fail("trailing input");
    return r;
  }

private:
  RegexPtr expr() {
    std::vector<RegexPtr> alts{term()};
    while (lex_.peek().kind == RxToken::Pipe) {
      lex_.take();
      alts.push_back(term());
    }
    return rx_union(std::move(alts));
  }

  RegexPtr term() {
    RegexPtr r = factor();
    for (;;) {
      auto k = lex_.peek().kind;
      if (k == RxToken::Amp) {
        lex_.take();
        r = rx_inter(std::move(r), factor());
      } else if (k == RxToken::Minus) {
        lex_.take();
        r = rx_diff(std::move(r), factor());
      } else {
        return r;
      }
    }
  }

  bool starts_item(RxToken::Kind k) const {
    switch (k) {
      case RxToken::Atom:
      case RxToken::Base:
      case RxToken::QTag:
      case RxToken::LBrack:
      case RxToken::Tilde:
      case RxToken::Dot:
        return true;
      default:
        return false;
    }
  }

  RegexPtr factor() {
    std::vector<RegexPtr> seq;
    while (starts_item(lex_.peek().kind)) seq.push_back(item());
    if (seq.empty()) lex_.fail("expected expression");
    return rx_concat(std::move(seq));
  }

  RegexPtr item() {
    if (lex_.peek().kind == RxToken::Tilde) {
      lex_.take();
      return rx_compl(item());
    }
    RegexPtr r = primary();
    for (;;) {
      auto k = lex_.peek().kind;
      if (k == RxToken::Star) {
        lex_.take();
        r = rx_star(std::move(r));
      } else if (k == RxToken::Plus) {
        lex_.take();
        r = rx_plus(std::move(r));
      } else if (k == RxToken::Quest) {
        lex_.take();
        r = rx_opt(std::move(r));
      } else {
        return r;
      }
    }
  }

  RegexPtr primary() {
    RxToken t = lex_.take();
    switch (t.kind) {
      case RxToken::Dot:
        return rx_any();
      case RxToken::Base:
        return rx_literal(syms_.base(t.text));
      case RxToken::QTag:
        return rx_literal(syms_.tag(t.text));
      case RxToken::Atom: {
        auto it = defs_.find(t.text);
        if (it != defs_.end()) return it->second;
        return rx_literal(syms_.tag(t.text));
      }
      case RxToken::LBrack: {
        RegexPtr r = expr();
        RxToken close = lex_.take();
        if (close.kind != RxToken::RBrack) lex_.fail("expected ']'");
        return r;
      }
      default:
        lex_.fail("unexpected token '" + t.text + "'");
    }
  }

  RxLexer lex_;
  SymbolTable& syms_;
  const std::map<std::string, RegexPtr>& defs_;
};

// Thompson-style fragment with a unique start and a unique accept state.
struct Frag {
  Nfa nfa;  // accept marked on exactly one state
  uint32_t accept;
};

Frag frag_basic(bool any, Symbol sym, bool epsilon_only) {
  Frag f;
  uint32_t s = f.nfa.add_state();
  uint32_t a = f.nfa.add_state();
  f.nfa.start = s;
  f.accept = a;
  f.nfa.states[a].accept = true;
  if (epsilon_only) {
    f.nfa.add_eps(s, a);
  } else if (any) {
    f.nfa.add_any_other(s, a);
  } else {
    f.nfa.add_edge(s, sym, a);
  }
  return f;
}

// Appends `src` states into `dst`; returns the offset.
uint32_t merge_states(Nfa& dst, const Nfa& src) {
  uint32_t off = static_cast<uint32_t>(dst.states.size());
  for (const auto& st : src.states) {
    Nfa::State copy;
    copy.accept = false;  // accepts re-marked by callers
    for (const auto& e : st.edges) {
      copy.edges.push_back(Nfa::Edge{e.any_other, e.sym, e.to + off});
    }
    for (uint32_t t : st.eps) copy.eps.push_back(t + off);
    dst.states.push_back(std::move(copy));
  }
  dst.named.insert(src.named.begin(), src.named.end());
  return off;
}

Frag frag_from_nfa(Nfa n) {
  // Collapse to the single-accept invariant.
  Frag f;
  f.nfa.named = n.named;
  uint32_t off = merge_states(f.nfa, n);
  uint32_t acc = f.nfa.add_state();
  f.nfa.states[acc].accept = true;
  for (uint32_t i = 0; i < n.states.size(); ++i) {
    if (n.states[i].accept) f.nfa.add_eps(off + i, acc);
  }
  f.nfa.start = n.start + off;
  f.accept = acc;
  return f;
}

Frag compile_frag(const RegexPtr& r);

Frag frag_binary_dfa(const RegexPtr& a, const RegexPtr& b, ProductOp op) {
  Dfa da = compile_regex(a);
  Dfa db = compile_regex(b);
  Dfa d = minimize(product(da, db, op));
  return frag_from_nfa(Nfa::from_dfa(d));
}

Frag compile_frag(const RegexPtr& r) {
  switch (r->kind) {
    case Regex::Kind::Epsilon:
      return frag_basic(false, 0, true);
    case Regex::Kind::Literal:
      return frag_basic(false, r->sym, false);
    case Regex::Kind::Any:
      return frag_basic(true, 0, false);
    case Regex::Kind::Concat: {
      Frag acc = compile_frag(r->kids[0]);
      for (size_t i = 1; i < r->kids.size(); ++i) {
        Frag next = compile_frag(r->kids[i]);
        acc.nfa.lift(next.nfa.named);
        next.nfa.lift(acc.nfa.named);
        uint32_t off = merge_states(acc.nfa, next.nfa);
        acc.nfa.states[acc.accept].accept = false;
        acc.nfa.add_eps(acc.accept, next.nfa.start + off);
        acc.accept = next.accept + off;
        acc.nfa.states[acc.accept].accept = true;
      }
      return acc;
    }
    case Regex::Kind::Union: {
      Frag out;
      uint32_t s = out.nfa.add_state();
      uint32_t a = out.nfa.add_state();
      out.nfa.start = s;
      out.accept = a;
      out.nfa.states[a].accept = true;
      std::vector<Frag> kids;
      std::set<Symbol> all_named;
      for (const auto& k : r->kids) {
        kids.push_back(compile_frag(k));
        all_named.insert(kids.back().nfa.named.begin(),
                         kids.back().nfa.named.end());
      }
      for (auto& k : kids) {
        k.nfa.lift(all_named);
        uint32_t off = merge_states(out.nfa, k.nfa);
        out.nfa.add_eps(s, k.nfa.start + off);
        out.nfa.add_eps(k.accept + off, a);
      }
      return out;
    }
    case Regex::Kind::Inter:
      return frag_binary_dfa(r->kids[0], r->kids[1], ProductOp::And);
    case Regex::Kind::Diff:
      return frag_binary_dfa(r->kids[0], r->kids[1], ProductOp::Diff);
    case Regex::Kind::Compl: {
      Dfa d = compile_regex(r->kids[0]);
      return frag_from_nfa(Nfa::from_dfa(complement(d)));
    }
    case Regex::Kind::Star:
    case Regex::Kind::Plus:
    case Regex::Kind::Opt: {
      Frag kid = compile_frag(r->kids[0]);
      Frag out;
      out.nfa.named = kid.nfa.named;
      uint32_t s = out.nfa.add_state();
      uint32_t a = out.nfa.add_state();
      out.nfa.start = s;
      out.accept = a;
      out.nfa.states[a].accept = true;
      uint32_t off = merge_states(out.nfa, kid.nfa);
      out.nfa.add_eps(s, kid.nfa.start + off);
      out.nfa.add_eps(kid.accept + off, a);
      if (r->kind != Regex::Kind::Plus) out.nfa.add_eps(s, a);   // empty pass
      if (r->kind != Regex::Kind::Opt) out.nfa.add_eps(kid.accept + off,
                                                       kid.nfa.start + off);
      return out;
    }
  }
  throw std::logic_error("unhandled regex node");
}

}  // namespace

RegexPtr parse_regex(std::string_view text, SymbolTable& syms,
                     const std::map<std::string, RegexPtr>& defs) {
  return RxParser(text, syms, defs).parse();
}

Nfa regex_to_nfa(const RegexPtr& r) { return compile_frag(r).nfa; }

Dfa compile_regex(const RegexPtr& r) {
  return minimize(determinize(regex_to_nfa(r)));
}

std::string format_regex(const RegexPtr& r, const SymbolTable& syms) {
  switch (r->kind) {
    case Regex::Kind::Epsilon: return "[]";
    case Regex::Kind::Literal: return syms.text(r->sym);
    case Regex::Kind::Any: return ".";
    case Regex::Kind::Concat: {
      std::string out;
      for (const auto& k : r->kids) {
        if (!out.empty()) out += ' ';
        out += format_regex(k, syms);
      }
      return "[" + out + "]";
    }
    case Regex::Kind::Union: {
      std::string out;
      for (const auto& k : r->kids) {
        if (!out.empty()) out += " | ";
        out += format_regex(k, syms);
      }
      return "[" + out + "]";
    }
    case Regex::Kind::Inter:
      return "[" + format_regex(r->kids[0], syms) + " & " +
             format_regex(r->kids[1], syms) + "]";
    case Regex::Kind::Diff:
      return "[" + format_regex(r->kids[0], syms) + " - " +
             format_regex(r->kids[1], syms) + "]";
    case Regex::Kind::Compl:
      return "~" + format_regex(r->kids[0], syms);
    case Regex::Kind::Star:
      return format_regex(r->kids[0], syms) + "*";
    case Regex::Kind::Plus:
      return format_regex(r->kids[0], syms) + "+";
    case Regex::Kind::Opt:
      return format_regex(r->kids[0], syms) + "?";
  }
  return "?";
}

}  // namespace sculpt::fsig
