// sculpt/fsig/symbols.cpp
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

#include "sculpt/fsig/symbols.hpp"

namespace sculpt::fsig {

SymbolTable::SymbolTable() {
  intern("@@", "@@", false);
  intern("@", "@", false);
}

Symbol SymbolTable::intern(const std::string& key, std::string text,
                           bool is_base) {
  auto it = by_key_.find(key);
  if (it != by_key_.end()) return it->second;
  Symbol s = static_cast<Symbol>(texts_.size());
  by_key_.emplace(key, s);
  texts_.push_back(std::move(text));
  is_base_.push_back(is_base);
  return s;
}

Symbol SymbolTable::tag(std::string_view text) {
  std::string t(text);
  return intern(t, t, false);
}

Symbol SymbolTable::base(std::string_view lemma) {
  std::string t(lemma);
  return intern("\"" + t, "\"" + t + "\"", true);
}

}  // namespace sculpt::fsig
