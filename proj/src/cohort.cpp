// sculpt/cohort.cpp
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

#include "sculpt/cohort.hpp"

#include <algorithm>
#include <cctype>

namespace sculpt {

bool Reading::has_tag(Tag t) const {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

std::optional<Tag> Reading::pos_tag() const {
  for (Tag t : tags) {
    if (t.kind() == TagKind::Pos) return t;
  }
  return std::nullopt;
}

std::string surface_to_display(const std::string& surface) {
  if (surface.empty()) return surface;
  unsigned char c0 = static_cast<unsigned char>(surface[0]);
  if (std::isupper(c0)) {
    std::string out = "*";
    out += static_cast<char>(std::tolower(c0));
    out += surface.substr(1);
    return out;
  }
  return surface;
}

std::string display_to_surface(const std::string& display) {
  if (display.size() > 1 && display[0] == '*') {
    std::string out;
    out += static_cast<char>(std::toupper(static_cast<unsigned char>(display[1])));
    out += display.substr(2);
    return out;
  }
  if (display.size() > 1 && display[0] == '$') {
    return display.substr(1);
  }
  return display;
}

std::string fold_case(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool same_reading(const Reading& a, const Reading& b) {
  return a.base == b.base && a.tags == b.tags;
}

size_t total_readings(const Sentence& s) {
  size_t n = 0;
  for (const auto& c : s.cohorts) n += c.readings.size();
  return n;
}

size_t total_readings(const Document& d) {
  size_t n = 0;
  for (const auto& s : d.sentences) n += total_readings(s);
  return n;
}

}  // namespace sculpt
