// sculpt/metrics.cpp
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

#include "sculpt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace sculpt {

namespace {

// Reading identity: base plus tag multiset. Syntactic-function tags are
// stripped from the system reading unless the gold reading carries any.
bool reading_equal(const Reading& out, const Reading& gold,
                   const MetricOptions& opts) {
  if (out.base != gold.base) return false;
  bool keep_syn = opts.include_synfunc ||
                  std::any_of(gold.tags.begin(), gold.tags.end(), [](Tag t) {
                    return t.kind() == TagKind::SynFunc;
                  });
  auto sorted_ids = [&](const std::vector<Tag>& tags, bool strip_syn) {
    std::vector<uint32_t> ids;
    ids.reserve(tags.size());
    for (Tag t : tags) {
      if (strip_syn && t.kind() == TagKind::SynFunc) continue;
      ids.push_back(t.seq());
    }
    std::sort(ids.begin(), ids.end());
    return ids;
  };
  return sorted_ids(out.tags, !keep_syn) == sorted_ids(gold.tags, !keep_syn);
}

std::vector<const Cohort*> word_tokens(const Document& d) {
  std::vector<const Cohort*> out;
  for (const auto& s : d.sentences) {
    for (const auto& c : s.cohorts) {
      if (!c.is_punct) out.push_back(&c);
    }
  }
  return out;
}

struct Tally {
  size_t received_appropriate = 0;
  size_t intended = 0;
  size_t received = 0;
  size_t errors = 0;
};

Tally tally(const Document& out, const GoldDoc& gold,
            const MetricOptions& opts) {
  auto tokens = word_tokens(out);
  if (tokens.size() != gold.intended.size()) {
    throw MisalignedGold("gold has " + std::to_string(gold.intended.size()) +
                         " tokens, output has " +
                         std::to_string(tokens.size()));
  }
  Tally t;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (!gold.surfaces.empty() &&
        fold_case(gold.surfaces[i]) != fold_case(tokens[i]->surface)) {
      throw MisalignedGold("token " + std::to_string(i) + ": gold surface '" +
                           gold.surfaces[i] + "' vs output '" +
                           tokens[i]->surface + "'");
    }
    const auto& intended = gold.intended[i];
    size_t hit = 0;
    for (const auto& gr : intended) {
      bool found = std::any_of(
          tokens[i]->readings.begin(), tokens[i]->readings.end(),
          [&](const Reading& r) { return reading_equal(r, gr, opts); });
      if (found) ++hit;
    }
    t.received_appropriate += hit;
    t.intended += intended.size();
    t.received += tokens[i]->readings.size();
    if (hit < intended.size()) ++t.errors;
  }
  return t;
}

}  // namespace

GoldDoc GoldDoc::from_document(const Document& d) {
  GoldDoc g;
  for (const auto* c : word_tokens(d)) {
    g.surfaces.push_back(c->surface);
    g.intended.push_back(c->readings);
  }
  return g;
}

double recall(const Document& out, const GoldDoc& gold,
              const MetricOptions& opts) {
  Tally t = tally(out, gold, opts);
  if (t.intended == 0) return 1.0;
  return static_cast<double>(t.received_appropriate) /
         static_cast<double>(t.intended);
}

double precision(const Document& out, const GoldDoc& gold,
                 const MetricOptions& opts) {
  Tally t = tally(out, gold, opts);
  if (t.received == 0) return 1.0;
  return static_cast<double>(t.received_appropriate) /
         static_cast<double>(t.received);
}

AmbiguityStats ambiguity_stats(const Document& out) {
  AmbiguityStats st;
  size_t unamb = 0;
  for (const auto* c : word_tokens(out)) {
    ++st.tokens;
    st.readings += c->readings.size();
    if (c->readings.size() == 1) ++unamb;
  }
  if (st.tokens > 0) {
    st.unambiguous_fraction =
        static_cast<double>(unamb) / static_cast<double>(st.tokens);
    st.readings_per_word =
        static_cast<double>(st.readings) / static_cast<double>(st.tokens);
  }
  return st;
}

EvalReport evaluate(const Document& out, const GoldDoc& gold,
                    const MetricOptions& opts) {
  Tally t = tally(out, gold, opts);
  AmbiguityStats st = ambiguity_stats(out);
  EvalReport r;
  r.recall = t.intended == 0 ? 1.0
                             : static_cast<double>(t.received_appropriate) /
                                   static_cast<double>(t.intended);
  r.precision = t.received == 0 ? 1.0
                                : static_cast<double>(t.received_appropriate) /
                                      static_cast<double>(t.received);
  r.tokens = st.tokens;
  r.unambiguous_fraction = st.unambiguous_fraction;
  r.readings_per_word = st.readings_per_word;
  r.errors = t.errors;
  return r;
}

std::string format_ratio2(double value) {
  // Half-up at two decimals, independent of the FP rounding mode.
  double scaled = std::floor(value * 100.0 + 0.5) / 100.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", scaled);
  return buf;
}

std::string format_percent(double ratio) {
  return format_ratio2(ratio * 100.0) + "%";
}

std::string compare_report(
    const std::vector<std::pair<std::string, EvalReport>>& rows) {
  size_t w = std::string("System").size();
  for (const auto& [name, r] : rows) w = std::max(w, name.size());
  std::string out = "System";
  out.append(w - 6 + 2, ' ');
  out += "Recall   Precision\n";
  for (const auto& [name, r] : rows) {
    out += name;
    out.append(w - name.size() + 2, ' ');
    std::string rec = format_percent(r.recall);
    out += rec;
    out.append(9 - rec.size(), ' ');
    out += format_percent(r.precision);
    out += '\n';
  }
  return out;
}

std::string compare_report_tsv(
    const std::vector<std::pair<std::string, EvalReport>>& rows) {
  std::string out = "system\trecall\tprecision\n";
  for (const auto& [name, r] : rows) {
    out += name + '\t' + format_percent(r.recall) + '\t' +
           format_percent(r.precision) + '\n';
  }
  return out;
}

std::string format_eval_report(const EvalReport& r) {
  std::string out;
  out += "tokens:               " + std::to_string(r.tokens) + '\n';
  out += "recall:               " + format_percent(r.recall) + '\n';
  out += "precision:            " + format_percent(r.precision) + '\n';
  out += "unambiguous:          " + format_percent(r.unambiguous_fraction) + '\n';
  out += "readings per word:    " + format_ratio2(r.readings_per_word) + '\n';
  out += "tokens with loss:     " + std::to_string(r.errors) + '\n';
  return out;
}

std::string format_eval_report_tsv(const EvalReport& r) {
  return "tokens\t" + std::to_string(r.tokens) + "\nrecall\t" +
         format_percent(r.recall) + "\nprecision\t" +
         format_percent(r.precision) + "\nunambiguous\t" +
         format_percent(r.unambiguous_fraction) + "\nreadings_per_word\t" +
         format_ratio2(r.readings_per_word) + "\ntokens_with_loss\t" +
         std::to_string(r.errors) + "\n";
}

}  // namespace sculpt
