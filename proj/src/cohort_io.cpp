// sculpt/cohort_io.cpp
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

#include "sculpt/cohort_io.hpp"

#include <fstream>
#include <sstream>

namespace sculpt {

const std::set<std::string>& default_delimiters() {
  static const std::set<std::string> d = {"$.", "$!", "$?"};
  return d;
}

namespace {

class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  char next() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\n' ||
                      peek() == '\r')) {
      next();
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, col_, msg);
  }

  void expect(char c, const char* what) {
    if (eof() || peek() != c) fail(std::string("expected ") + what);
    next();
  }

  // A double-quoted string; no escapes.
  std::string quoted() {
    expect('"', "'\"'");
    std::string out;
    while (!eof() && peek() != '"') {
      if (peek() == '\n') fail("unterminated string");
      out += next();
    }
    if (eof()) fail("unterminated string");
    next();
    return out;
  }

  // A bare atom: anything up to whitespace, ')' or '('.
  std::string atom() {
    std::string out;
    while (!eof()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ')' ||
          c == '(' || c == '"') {
        break;
      }
      out += next();
    }
    if (out.empty()) fail("expected tag");
    return out;
  }

  int line() const { return line_; }
  int col() const { return col_; }

private:
  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

Reading parse_reading(Cursor& cur, TagPool& pool) {
  Reading r;
  cur.expect('(', "'('");
  cur.skip_ws();
  r.base = cur.quoted();
  for (;;) {
    cur.skip_ws();
    if (cur.eof()) cur.fail("unterminated reading");
    char c = cur.peek();
    if (c == ')') {
      cur.next();
      break;
    }
    if (c == '(') {
      // Trailing syntactic-function group.
      cur.next();
      for (;;) {
        cur.skip_ws();
        if (cur.eof()) cur.fail("unterminated function group");
        if (cur.peek() == ')') {
          cur.next();
          break;
        }
        r.tags.push_back(pool.intern(cur.atom()));
      }
      cur.skip_ws();
      if (cur.eof() || cur.peek() != ')') {
        cur.fail("function group must end the reading");
      }
      cur.next();
      break;
    }
    if (c == '"') cur.fail("unexpected string inside reading");
    r.tags.push_back(pool.intern(cur.atom()));
  }
  if (r.tags.empty()) cur.fail("empty reading");
  return r;
}

Cohort parse_cohort(Cursor& cur, TagPool& pool) {
  Cohort c;
  cur.expect('(', "'('");
  cur.skip_ws();
  int line = cur.line(), col = cur.col();
  std::string wrapped = cur.quoted();
  if (wrapped.size() < 2 || wrapped.front() != '<' || wrapped.back() != '>') {
    throw ParseError(line, col, "missing surface line: form must be \"<...>\"");
  }
  c.display_form = wrapped.substr(1, wrapped.size() - 2);
  c.surface = display_to_surface(c.display_form);
  for (;;) {
    cur.skip_ws();
    if (cur.eof()) cur.fail("unterminated cohort");
    if (cur.peek() == ')') {
      cur.next();
      break;
    }
    c.readings.push_back(parse_reading(cur, pool));
  }
  c.is_punct = c.readings.empty();
  return c;
}

}  // namespace

Document parse_cohort_stream(std::string_view text, TagPool& pool,
                             const std::set<std::string>& delimiters) {
  Document doc;
  Sentence cur_sentence;
  Cursor cur(text);
  for (;;) {
    cur.skip_ws();
    if (cur.eof()) break;
    Cohort c = parse_cohort(cur, pool);
    bool is_delim = c.is_punct && delimiters.count(c.display_form) > 0;
    cur_sentence.cohorts.push_back(std::move(c));
    if (is_delim) {
      doc.sentences.push_back(std::move(cur_sentence));
      cur_sentence = Sentence{};
    }
  }
  if (!cur_sentence.cohorts.empty()) {
    doc.sentences.push_back(std::move(cur_sentence));
  }
  return doc;
}

std::string serialize_reading(const Reading& r) {
  std::string out = "(\"" + r.base + "\"";
  std::string syn;
  for (Tag t : r.tags) {
    if (t.kind() == TagKind::SynFunc) {
      if (!syn.empty()) syn += ' ';
      syn += t.text();
    } else {
      out += ' ';
      out += t.text();
    }
  }
  if (!syn.empty()) {
    out += " (" + syn + ")";
  }
  out += ')';
  return out;
}

std::string serialize_cohort(const Cohort& c) {
  std::string out = "(\"<" + c.display_form + ">\"";
  if (c.readings.empty()) {
    out += ")\n";
    return out;
  }
  out += '\n';
  for (size_t i = 0; i < c.readings.size(); ++i) {
    out += "  ";
    out += serialize_reading(c.readings[i]);
    if (i + 1 == c.readings.size()) out += ')';
    out += '\n';
  }
  return out;
}

std::string serialize_sentence(const Sentence& s) {
  std::string out;
  for (const auto& c : s.cohorts) out += serialize_cohort(c);
  return out;
}

std::string serialize_cohort_stream(const Document& doc) {
  std::string out;
  for (const auto& s : doc.sentences) out += serialize_sentence(s);
  return out;
}

Document load_cohort_file(const std::string& path, TagPool& pool,
                          const std::set<std::string>& delimiters) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cohort file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  return parse_cohort_stream(text, pool, delimiters);
}

}  // namespace sculpt
