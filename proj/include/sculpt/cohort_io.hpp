// sculpt/cohort_io.hpp
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

#ifndef SCULPT_COHORT_IO_HPP
#define SCULPT_COHORT_IO_HPP

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sculpt/cohort.hpp"

namespace sculpt {

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Sentence-final punctuation, by display form.
const std::set<std::string>& default_delimiters();

// Reads a stream of cohort blocks:
//
//   ("<form>"
//     ("base" TAG TAG ... (@FUNC ...))
//     ...)
//
// Bare blocks like ("<$.>") are punctuation cohorts. Sentences are split
// after each delimiter cohort; a trailing undelimited run still forms a
// sentence. Throws ParseError on malformed input.
Document parse_cohort_stream(std::string_view text, TagPool& pool,
                             const std::set<std::string>& delimiters =
                                 default_delimiters());

// Inverse of parse_cohort_stream for canonical documents: two-space
// indentation, one reading per line, syntactic-function tags wrapped in a
// trailing parenthesized group.
std::string serialize_cohort_stream(const Document& doc);
std::string serialize_sentence(const Sentence& s);
std::string serialize_cohort(const Cohort& c);
std::string serialize_reading(const Reading& r);

Document load_cohort_file(const std::string& path, TagPool& pool,
                          const std::set<std::string>& delimiters =
                              default_delimiters());

}  // namespace sculpt

#endif  // SCULPT_COHORT_IO_HPP
