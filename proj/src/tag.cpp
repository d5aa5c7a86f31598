// sculpt/tag.cpp
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

#include "sculpt/tag.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sculpt {

const char* tag_kind_name(TagKind k) {
  switch (k) {
    case TagKind::Pos: return "POS";
    case TagKind::Feature: return "FEATURE";
    case TagKind::LexFeature: return "LEXFEATURE";
    case TagKind::SynFunc: return "SYNFUNC";
    case TagKind::Boundary: return "BOUNDARY";
    case TagKind::HeurFlag: return "HEURFLAG";
  }
  return "?";
}

static bool parse_kind(std::string_view s, TagKind* out) {
  if (s == "POS") { *out = TagKind::Pos; return true; }
  if (s == "FEATURE") { *out = TagKind::Feature; return true; }
  if (s == "LEXFEATURE") { *out = TagKind::LexFeature; return true; }
  if (s == "SYNFUNC") { *out = TagKind::SynFunc; return true; }
  if (s == "BOUNDARY") { *out = TagKind::Boundary; return true; }
  if (s == "HEURFLAG") { *out = TagKind::HeurFlag; return true; }
  return false;
}

Tag TagPool::register_tag(std::string_view text, TagKind kind) {
  auto it = by_text_.find(text);
  if (it != by_text_.end()) {
    it->second->kind = kind;
    it->second->registered = true;
    return Tag(it->second);
  }
  entries_.push_back(TagEntry{std::string(text), kind,
                              static_cast<uint32_t>(entries_.size()), true});
  TagEntry* e = &entries_.back();
  by_text_.emplace(std::string_view(e->text), e);
  return Tag(e);
}

Tag TagPool::add_inferred(std::string_view text, TagKind kind) {
  entries_.push_back(TagEntry{std::string(text), kind,
                              static_cast<uint32_t>(entries_.size()), false});
  TagEntry* e = &entries_.back();
  by_text_.emplace(std::string_view(e->text), e);
  return Tag(e);
}

Tag TagPool::intern(std::string_view text) {
  auto it = by_text_.find(text);
  if (it != by_text_.end()) {
    return Tag(it->second);
  }
  TagKind kind = TagKind::Feature;
  if (!text.empty() && text.front() == '@') {
    kind = TagKind::SynFunc;
  } else if (text.size() >= 2 && text.front() == '<' && text.back() == '>') {
    kind = TagKind::LexFeature;
  }
  return add_inferred(text, kind);
}

Tag TagPool::find(std::string_view text) const {
  auto it = by_text_.find(text);
  if (it == by_text_.end()) return Tag();
  return Tag(it->second);
}

void TagPool::load_tagset(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open tagset file: " + path);
  }
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string text, kind_s;
    if (!(ls >> text)) continue;
    if (!(ls >> kind_s)) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": missing kind for tag " + text);
    }
    TagKind kind;
    if (!parse_kind(kind_s, &kind)) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": unknown tag kind " + kind_s);
    }
    register_tag(text, kind);
  }
}

}  // namespace sculpt
