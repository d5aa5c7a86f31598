// sculpt/text_heuristics.cpp
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

#include "sculpt/text_heuristics.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sculpt {

std::optional<size_t> LexStats::count(const std::string& form,
                                      const std::string& pos) const {
  auto it = counts.find(form);
  if (it == counts.end()) return std::nullopt;
  auto jt = it->second.find(pos);
  if (jt == it->second.end()) return std::nullopt;
  return jt->second;
}

void LexStats::add(const std::string& form, const std::string& pos) {
  ++counts[form][pos];
}

size_t LexStats::total() const {
  size_t n = 0;
  for (const auto& [form, by_pos] : counts) {
    for (const auto& [pos, c] : by_pos) n += c;
  }
  return n;
}

std::string LexStats::to_tsv() const {
  std::string out;
  for (const auto& [form, by_pos] : counts) {
    for (const auto& [pos, c] : by_pos) {
      out += form + '\t' + pos + '\t' + std::to_string(c) + '\n';
    }
  }
  return out;
}

LexStats collect_lexical_stats(const Document& d, bool lemma_keyed) {
  LexStats st;
  for (const auto& s : d.sentences) {
    for (const auto& c : s.cohorts) {
      if (c.is_punct || c.readings.size() != 1) continue;
      const Reading& r = c.readings[0];
      auto pos = r.pos_tag();
      if (!pos) continue;
      std::string key = lemma_keyed ? r.base : fold_case(c.surface);
      st.add(key, pos->text());
    }
  }
  return st;
}

Cohort resolve_by_predominance(const Cohort& c, const LexStats& st,
                               const PredominanceConfig& cfg) {
  if (c.is_punct || c.readings.size() < 2) return c;

  // The cohort's ambiguity must be exactly an eligible POS pair.
  std::set<std::string> pos_set;
  for (const auto& r : c.readings) {
    auto pos = r.pos_tag();
    if (!pos) return c;
    pos_set.insert(pos->text());
  }
  if (pos_set.size() != 2) return c;
  std::string p = *pos_set.begin();
  std::string q = *std::next(pos_set.begin());
  bool eligible = false;
  for (const auto& [a, b] : cfg.eligible) {
    if ((a == p && b == q) || (a == q && b == p)) {
      eligible = true;
      break;
    }
  }
  if (!eligible) return c;

  auto key_for = [&](const std::string& pos) -> std::string {
    if (!cfg.lemma_keyed) return fold_case(c.surface);
    for (const auto& r : c.readings) {
      auto rp = r.pos_tag();
      if (rp && rp->text() == pos) return r.base;
    }
    return fold_case(c.surface);
  };
  auto cp = st.count(key_for(p), p);
  auto cq = st.count(key_for(q), q);
  // Never compare against an undefined count.
  if (!cp || !cq) return c;

  bool p_wins = static_cast<double>(*cp) >= cfg.threshold * static_cast<double>(*cq);
  bool q_wins = static_cast<double>(*cq) >= cfg.threshold * static_cast<double>(*cp);
  if (p_wins == q_wins) return c;  // no clear winner

  const std::string& keep = p_wins ? p : q;
  Cohort out = c;
  out.readings.clear();
  for (const auto& r : c.readings) {
    if (r.pos_tag()->text() == keep) out.readings.push_back(r);
  }
  if (out.readings.empty()) return c;  // cannot happen, but never empty
  return out;
}

std::string format_noun_group(const NounGroup& g) {
  std::string out;
  for (const auto& [lemma, pos] : g.items) {
    if (!out.empty()) out += ' ';
    out += lemma + '/' + pos;
  }
  return out;
}

std::set<NounGroup> extract_noun_groups(const Document& d) {
  std::set<NounGroup> groups;
  for (const auto& s : d.sentences) {
    size_t i = 0;
    const size_t n = s.cohorts.size();
    auto nominal = [&](size_t k) {
      const Cohort& c = s.cohorts[k];
      if (c.is_punct || c.readings.size() != 1) return false;
      auto pos = c.readings[0].pos_tag();
      return pos && (pos->text() == "N" || pos->text() == "A");
    };
    while (i < n) {
      if (!nominal(i)) {
        ++i;
        continue;
      }
      size_t j = i;
      while (j + 1 < n && nominal(j + 1)) ++j;
      // Maximal run [i, j]; a group needs a noun head and a premodifier.
      if (j > i) {
        const Cohort& head = s.cohorts[j];
        if (head.readings[0].pos_tag()->text() == "N") {
          NounGroup g;
          for (size_t k = i; k <= j; ++k) {
            const Reading& r = s.cohorts[k].readings[0];
            g.items.emplace_back(r.base, r.pos_tag()->text());
          }
          groups.insert(std::move(g));
        }
      }
      i = j + 1;
    }
  }
  return groups;
}

Document mark_noun_groups(const Document& d,
                          const std::set<NounGroup>& groups) {
  Document out = d;
  for (const auto& g : groups) {
    const size_t k = g.items.size();
    for (auto& s : out.sentences) {
      if (s.cohorts.size() < k) continue;
      for (size_t start = 0; start + k <= s.cohorts.size(); ++start) {
        bool all = true;
        for (size_t off = 0; off < k; ++off) {
          const Cohort& c = s.cohorts[start + off];
          if (c.is_punct) {
            all = false;
            break;
          }
          const auto& [lemma, pos] = g.items[off];
          bool has = std::any_of(
              c.readings.begin(), c.readings.end(), [&](const Reading& r) {
                auto rp = r.pos_tag();
                return r.base == lemma && rp && rp->text() == pos;
              });
          if (!has) {
            all = false;
            break;
          }
        }
        if (!all) continue;
        for (size_t off = 0; off < k; ++off) {
          Cohort& c = s.cohorts[start + off];
          const auto& [lemma, pos] = g.items[off];
          std::vector<Reading> kept;
          for (const auto& r : c.readings) {
            auto rp = r.pos_tag();
            if (r.base == lemma && rp && rp->text() == pos) kept.push_back(r);
          }
          if (!kept.empty() && kept.size() < c.readings.size()) {
            c.readings = std::move(kept);
          }
        }
      }
    }
  }
  return out;
}

std::set<NounGroup> load_noun_groups(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open noun-group file: " + path);
  std::set<NounGroup> groups;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    NounGroup g;
    std::string item;
    while (ls >> item) {
      auto slash = item.rfind('/');
      if (slash == std::string::npos || slash == 0 || slash + 1 == item.size()) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": expected lemma/POS, got " + item);
      }
      g.items.emplace_back(item.substr(0, slash), item.substr(slash + 1));
    }
    if (!g.items.empty()) groups.insert(std::move(g));
  }
  return groups;
}

std::string format_noun_groups(const std::set<NounGroup>& groups) {
  std::string out;
  for (const auto& g : groups) {
    out += format_noun_group(g);
    out += '\n';
  }
  return out;
}

TextDisambiguateResult text_disambiguate(const Document& d, const CgGrammar& g,
                                         const TextHeuristicsConfig& cfg) {
  TextDisambiguateResult res;

  // 1. Grammar-based disambiguation.
  Document doc = disambiguate_document(d, g, cfg.engine).document;

  // 2-4. Noun groups: extract from the disambiguated text, mark every
  // instance, run the disambiguator again.
  if (cfg.use_noun_groups) {
    res.groups = cfg.external_groups ? *cfg.external_groups
                                     : extract_noun_groups(doc);
    doc = mark_noun_groups(doc, res.groups);
    doc = disambiguate_document(doc, g, cfg.engine).document;
  }

  // Lexical predominance over what is now fully disambiguated, plus one
  // final pass to let the grammar react.
  if (cfg.use_predominance) {
    res.stats = collect_lexical_stats(doc, cfg.predominance.lemma_keyed);
    for (auto& s : doc.sentences) {
      for (auto& c : s.cohorts) {
        c = resolve_by_predominance(c, res.stats, cfg.predominance);
      }
    }
    doc = disambiguate_document(doc, g, cfg.engine).document;
  }

  res.document = std::move(doc);
  return res;
}

}  // namespace sculpt
