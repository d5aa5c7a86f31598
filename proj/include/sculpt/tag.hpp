// sculpt/tag.hpp
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

#ifndef SCULPT_TAG_HPP
#define SCULPT_TAG_HPP

#include <cstdint>
#include <deque>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sculpt {

enum class TagKind : uint8_t {
  Pos,         // part of speech (N, V, A, ...)
  Feature,     // inflection/derivation feature (SG, PAST, VFIN, ...)
  LexFeature,  // lexical <...> feature (<SVO>, <Def>, ...)
  SynFunc,     // syntactic @-function (@SUBJ, @+FAUXV, ...)
  Boundary,    // clause/sentence boundary class (<**CLB>, ...)
  HeurFlag,    // marks analyses produced by the guesser (<Heur>, ...)
};

const char* tag_kind_name(TagKind k);

struct TagEntry {
  std::string text;
  TagKind kind;
  uint32_t seq;        // interning order, used for deterministic sorts
  bool registered;     // declared via register_tag/tagset, not shape-inferred
};

// Interned tag handle. Equal text implies identical entry, so comparisons
// are pointer comparisons.
class Tag {
public:
  Tag() : entry_(nullptr) {}
  explicit Tag(const TagEntry* e) : entry_(e) {}

  const std::string& text() const { return entry_->text; }
  TagKind kind() const { return entry_->kind; }
  uint32_t seq() const { return entry_->seq; }
  bool registered() const { return entry_->registered; }
  bool valid() const { return entry_ != nullptr; }

  bool operator==(const Tag& o) const { return entry_ == o.entry_; }
  bool operator!=(const Tag& o) const { return entry_ != o.entry_; }
  bool operator<(const Tag& o) const { return entry_->seq < o.entry_->seq; }

private:
  const TagEntry* entry_;
};

// Owns all tags. Tags handed out stay valid for the pool's lifetime.
// Kind is inferred from spelling plus whatever the tagset registry file
// declared; registration must happen before the first intern of a text.
class TagPool {
public:
  TagPool() = default;
  TagPool(const TagPool&) = delete;
  TagPool& operator=(const TagPool&) = delete;

  // Declares a tag with an explicit kind (tagset registry entries).
  Tag register_tag(std::string_view text, TagKind kind);

  // Interns by text; classifies unseen tags by shape:
  //   "@..."          -> SynFunc
  //   "<...>"         -> LexFeature (unless registered as Boundary/HeurFlag)
  //   registered POS  -> Pos
  //   anything else   -> Feature
  Tag intern(std::string_view text);

  // Returns an invalid Tag when the text was never interned.
  Tag find(std::string_view text) const;

  // Loads a registry file: one `TEXT KIND` pair per line, '#' comments.
  // KIND is one of POS FEATURE LEXFEATURE SYNFUNC BOUNDARY HEURFLAG.
  void load_tagset(const std::string& path);

  size_t size() const { return entries_.size(); }

private:
  Tag add_inferred(std::string_view text, TagKind kind);

  std::deque<TagEntry> entries_;
  std::unordered_map<std::string_view, TagEntry*> by_text_;
};

}  // namespace sculpt

#endif  // SCULPT_TAG_HPP
