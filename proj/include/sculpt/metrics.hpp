// sculpt/metrics.hpp
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

#ifndef SCULPT_METRICS_HPP
#define SCULPT_METRICS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "sculpt/cohort.hpp"

namespace sculpt {

struct MisalignedGold : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Per token, the set of intended appropriate readings (usually singleton),
// aligned 1:1 with the system's word tokens. Punctuation cohorts are not
// tokens.
struct GoldDoc {
  std::vector<std::string> surfaces;
  std::vector<std::vector<Reading>> intended;

  static GoldDoc from_document(const Document& d);
};

struct MetricOptions {
  // Syntactic-function tags are excluded from reading identity unless the
  // gold reading itself carries them.
  bool include_synfunc = false;
};

// received appropriate readings / intended appropriate readings
double recall(const Document& out, const GoldDoc& gold,
              const MetricOptions& opts = {});

// received appropriate readings / all received readings
double precision(const Document& out, const GoldDoc& gold,
                 const MetricOptions& opts = {});

struct AmbiguityStats {
  double unambiguous_fraction = 0.0;
  double readings_per_word = 0.0;
  size_t tokens = 0;
  size_t readings = 0;
};

AmbiguityStats ambiguity_stats(const Document& out);

struct EvalReport {
  double recall = 0.0;
  double precision = 0.0;
  size_t tokens = 0;
  double unambiguous_fraction = 0.0;
  double readings_per_word = 0.0;
  size_t errors = 0;  // tokens that lost an intended reading
};

EvalReport evaluate(const Document& out, const GoldDoc& gold,
                    const MetricOptions& opts = {});

// Ratio -> "99.77" with half-up rounding at two decimals.
std::string format_percent(double ratio);
std::string format_ratio2(double value);

// Aligned text table of Recall/Precision rows.
std::string compare_report(
    const std::vector<std::pair<std::string, EvalReport>>& rows);
std::string compare_report_tsv(
    const std::vector<std::pair<std::string, EvalReport>>& rows);

std::string format_eval_report(const EvalReport& r);
std::string format_eval_report_tsv(const EvalReport& r);

}  // namespace sculpt

#endif  // SCULPT_METRICS_HPP
