// sculpt/lexicon.cpp
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

#include "sculpt/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sculpt {

Lexicon Lexicon::load(const std::string& path, TagPool& pool,
                      const std::function<void(const std::string&)>& warn) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  // No delimiter cohorts in a lexicon file, so everything lands in one
  // sentence; iterate all blocks regardless.
  Document doc = parse_cohort_stream(ss.str(), pool, {});
  Lexicon lex;
  for (const auto& sent : doc.sentences) {
    for (const auto& cohort : sent.cohorts) {
      std::string key = fold_case(cohort.display_form);
      auto it = lex.entries_.find(key);
      if (it == lex.entries_.end()) {
        lex.entries_.emplace(key, cohort.readings);
        continue;
      }
      if (warn) warn("duplicate lexicon entry merged: " + key);
      for (const auto& r : cohort.readings) {
        bool present = std::any_of(it->second.begin(), it->second.end(),
                                   [&](const Reading& x) { return same_reading(x, r); });
        if (!present) it->second.push_back(r);
      }
    }
  }
  return lex;
}

const std::vector<Reading>* Lexicon::lookup(const std::string& surface) const {
  auto it = entries_.find(fold_case(surface));
  if (it == entries_.end()) return nullptr;
  return &it->second;
}

void Lexicon::add_entry(const std::string& form, std::vector<Reading> readings) {
  entries_[fold_case(form)] = std::move(readings);
}

bool GuesserRule::matches(const std::string& surface) const {
  if (!suffix.empty()) {
    if (surface.size() <= suffix.size()) return false;
    if (surface.compare(surface.size() - suffix.size(), suffix.size(), suffix) != 0)
      return false;
  }
  if (!prefix.empty()) {
    if (surface.size() <= prefix.size()) return false;
    if (surface.compare(0, prefix.size(), prefix) != 0) return false;
  }
  if (need_capitalized &&
      !(std::isupper(static_cast<unsigned char>(surface[0])))) {
    return false;
  }
  if (need_digit &&
      std::none_of(surface.begin(), surface.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    return false;
  }
  if (need_hyphen && surface.find('-') == std::string::npos) return false;
  return true;
}

namespace {

std::vector<Reading> parse_productions(const std::string& text, TagPool& pool,
                                       const std::string& where) {
  std::vector<Reading> out;
  std::string chunk;
  std::istringstream stream(text);
  std::vector<std::string> chunks;
  {
    std::string cur;
    std::string tok;
    while (stream >> tok) {
      if (tok == ";") {
        chunks.push_back(cur);
        cur.clear();
      } else {
        if (!cur.empty()) cur += ' ';
        cur += tok;
      }
    }
    if (!cur.empty()) chunks.push_back(cur);
  }
  for (const auto& c : chunks) {
    Reading r;
    r.origin = ReadingOrigin::Guesser;
    std::istringstream cs(c);
    std::string tag;
    while (cs >> tag) r.tags.push_back(pool.intern(tag));
    if (r.tags.empty()) {
      throw std::runtime_error(where + ": empty production");
    }
    bool flagged = std::any_of(r.tags.begin(), r.tags.end(), [](Tag t) {
      return t.kind() == TagKind::HeurFlag;
    });
    if (!flagged) {
      throw std::runtime_error(where + ": production lacks a heuristic flag tag");
    }
    out.push_back(std::move(r));
  }
  return out;
}

void parse_pattern(const std::string& text, GuesserRule* rule,
                   const std::string& where) {
  std::istringstream stream(text);
  std::string part;
  std::vector<std::string> parts;
  {
    std::string cur;
    for (char c : text) {
      if (c == '&') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
  }
  for (auto p : parts) {
    // trim
    while (!p.empty() && std::isspace(static_cast<unsigned char>(p.front()))) p.erase(p.begin());
    while (!p.empty() && std::isspace(static_cast<unsigned char>(p.back()))) p.pop_back();
    if (p.rfind("suffix:", 0) == 0) {
      std::string lit = p.substr(7);
      if (lit.size() < 2 || lit.front() != '"' || lit.back() != '"') {
        throw std::runtime_error(where + ": suffix literal must be quoted");
      }
      lit = lit.substr(1, lit.size() - 2);
      if (!lit.empty() && lit.front() == '-') lit.erase(lit.begin());
      rule->suffix = lit;
    } else if (p.rfind("prefix:", 0) == 0) {
      std::string lit = p.substr(7);
      if (lit.size() < 2 || lit.front() != '"' || lit.back() != '"') {
        throw std::runtime_error(where + ": prefix literal must be quoted");
      }
      lit = lit.substr(1, lit.size() - 2);
      if (!lit.empty() && lit.back() == '-') lit.pop_back();
      rule->prefix = lit;
    } else if (p == "shape:capitalized") {
      rule->need_capitalized = true;
    } else if (p == "shape:contains-digit") {
      rule->need_digit = true;
    } else if (p == "shape:contains-hyphen") {
      rule->need_hyphen = true;
    } else {
      throw std::runtime_error(where + ": unknown pattern " + p);
    }
  }
}

}  // namespace

Guesser Guesser::load(const std::string& path, TagPool& pool) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open guesser rule file: " + path);
  Guesser g;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string where = path + ":" + std::to_string(lineno);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "DEFAULT") {
      std::string rest;
      std::getline(ls, rest);
      g.default_productions_ = parse_productions(rest, pool, where);
      continue;
    }
    GuesserRule rule;
    try {
      rule.priority = std::stoi(first);
    } catch (...) {
      throw std::runtime_error(where + ": rule must start with a priority");
    }
    std::string rest;
    std::getline(ls, rest);
    auto arrow = rest.find("->");
    if (arrow == std::string::npos) {
      throw std::runtime_error(where + ": missing '->'");
    }
    std::string pattern = rest.substr(0, arrow);
    std::string prods = rest.substr(arrow + 2);
    // A trailing TERMINAL keyword closes the rule.
    {
      std::istringstream ps(prods);
      std::vector<std::string> toks;
      std::string t;
      while (ps >> t) toks.push_back(t);
      if (!toks.empty() && toks.back() == "TERMINAL") {
        rule.terminal = true;
        toks.pop_back();
      }
      prods.clear();
      for (const auto& tk : toks) {
        if (!prods.empty()) prods += ' ';
        prods += tk;
      }
    }
    parse_pattern(pattern, &rule, where);
    rule.productions = parse_productions(prods, pool, where);
    g.rules_.push_back(std::move(rule));
  }
  if (g.default_productions_.empty()) {
    throw std::runtime_error(path + ": missing DEFAULT production line");
  }
  std::stable_sort(g.rules_.begin(), g.rules_.end(),
                   [](const GuesserRule& a, const GuesserRule& b) {
                     return a.priority < b.priority;
                   });
  return g;
}

std::vector<Reading> Guesser::guess(const std::string& surface) const {
  std::vector<Reading> out;
  for (const auto& rule : rules_) {
    if (!rule.matches(surface)) continue;
    for (Reading r : rule.productions) {
      r.base = fold_case(surface);
      out.push_back(std::move(r));
    }
    if (rule.terminal) break;
  }
  if (out.empty()) {
    for (Reading r : default_productions_) {
      r.base = fold_case(surface);
      out.push_back(std::move(r));
    }
  }
  return out;
}

Sentence analyze(const Lexicon& lex, const Guesser& g, TagPool& pool,
                 const std::vector<std::string>& tokens) {
  Sentence sent;
  Tag cap = pool.intern("<*>");
  for (const auto& tok : tokens) {
    Cohort c;
    if (!tok.empty() && tok[0] == '$') {
      c.surface = tok.substr(1);
      c.display_form = tok;
      c.is_punct = true;
      sent.cohorts.push_back(std::move(c));
      continue;
    }
    c.surface = tok;
    c.display_form = surface_to_display(tok);
    bool capitalized = !c.display_form.empty() && c.display_form[0] == '*';
    const std::vector<Reading>* found = lex.lookup(tok);
    std::vector<Reading> readings = found ? *found : g.guess(tok);
    if (capitalized) {
      for (auto& r : readings) r.tags.insert(r.tags.begin(), cap);
    }
    c.readings = std::move(readings);
    sent.cohorts.push_back(std::move(c));
  }
  return sent;
}

Document analyze_document(const Lexicon& lex, const Guesser& g, TagPool& pool,
                          const std::vector<std::string>& tokens) {
  Document doc;
  std::vector<std::string> cur;
  for (const auto& tok : tokens) {
    cur.push_back(tok);
    if (lex.delimiters().count(tok) > 0) {
      doc.sentences.push_back(analyze(lex, g, pool, cur));
      cur.clear();
    }
  }
  if (!cur.empty()) {
    doc.sentences.push_back(analyze(lex, g, pool, cur));
  }
  return doc;
}

std::vector<std::string> tokenize_demo(const std::string& text) {
  static const std::set<std::string> punct = {".", "!", "?", ",", ";", ":"};
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (punct.count(tok) > 0) {
      out.push_back("$" + tok);
    } else {
      out.push_back(tok);
    }
  }
  return out;
}

}  // namespace sculpt
