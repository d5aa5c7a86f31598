// sculpt/fsig/symbols.hpp
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

#ifndef SCULPT_FSIG_SYMBOLS_HPP
#define SCULPT_FSIG_SYMBOLS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sculpt::fsig {

// One alphabet for everything: morphological/syntactic/boundary tags,
// base-form literals and the word/sentence boundary markers. Base forms
// live in their own keyspace so a lemma never collides with a tag.
using Symbol = uint32_t;

class SymbolTable {
public:
  SymbolTable();

  Symbol sentence_edge() const { return 0; }  // "@@"
  Symbol word_boundary() const { return 1; }  // "@"

  Symbol tag(std::string_view text);
  Symbol base(std::string_view lemma);

  // Display text; base symbols render quoted.
  const std::string& text(Symbol s) const { return texts_[s]; }
  bool is_base(Symbol s) const { return is_base_[s]; }

  size_t size() const { return texts_.size(); }

private:
  Symbol intern(const std::string& key, std::string text, bool is_base);

  std::unordered_map<std::string, Symbol> by_key_;
  std::vector<std::string> texts_;
  std::vector<bool> is_base_;
};

}  // namespace sculpt::fsig

#endif  // SCULPT_FSIG_SYMBOLS_HPP
