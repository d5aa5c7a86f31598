// sculpt/cohort.hpp
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

#ifndef SCULPT_COHORT_HPP
#define SCULPT_COHORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "sculpt/tag.hpp"

namespace sculpt {

enum class ReadingOrigin : uint8_t { Lexicon, Guesser, Mapped };

// One analysis of a token: base form plus ordered tags. Syntactic-function
// tags, when present, trail the morphological tags.
struct Reading {
  std::string base;
  std::vector<Tag> tags;
  ReadingOrigin origin = ReadingOrigin::Lexicon;

  bool has_tag(Tag t) const;
  std::optional<Tag> pos_tag() const;  // the single Pos-kind tag
  bool operator==(const Reading& o) const {
    return base == o.base && tags == o.tags;
  }
};

// A surface token with its alternative readings. Punctuation cohorts carry
// no readings and act as unambiguous barriers.
struct Cohort {
  std::string surface;       // as appearing in text, e.g. "That"
  std::string display_form;  // bracketed form, e.g. "*that"
  std::vector<Reading> readings;
  bool is_punct = false;

  bool unambiguous() const { return readings.size() == 1; }
};

struct Sentence {
  std::vector<Cohort> cohorts;
};

struct Document {
  std::vector<Sentence> sentences;
};

// "That" <-> "*that"; "$."-style punctuation markers pass through.
std::string surface_to_display(const std::string& surface);
std::string display_to_surface(const std::string& display);

std::string fold_case(const std::string& s);

// Structural equality over readings (base + exact tag sequence).
bool same_reading(const Reading& a, const Reading& b);

size_t total_readings(const Sentence& s);
size_t total_readings(const Document& d);

}  // namespace sculpt

#endif  // SCULPT_COHORT_HPP
