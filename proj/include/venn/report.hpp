// Copyright 2026 The vennreduce Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Machine-readable analysis reports.
//
// Schema "venn-report" version 1:
//   diagram, kind, m, n,
//   metrics  {regions, edges, edges_per_surface{id: count}},
//   flags    {venn, simple, reducible, fully_reducible},
//   witnesses{minimal_non_venn, corollary1{r: witness}},
//   checks   {lemma1, deletion_identity, lemma2, theorem3, theorem4}
// Fields that do not apply (e.g. reducibility of a non-Venn diagram) are null.

#pragma once

#include <map>
#include <optional>
#include <string>

#include "venn/analysis.hpp"
#include "venn/io.hpp"

namespace venn {

inline Json to_json(const SubsetWitness& w) {
  return {{"subset", w.subset.ids()},
          {"label", SignVector{compact_bits(w.label, w.subset.bits()), w.subset.size()}.to_string()},
          {"components", w.components},
          {"regions", w.regions}};
}

inline Json to_json(const Theorem3Record& r) {
  return {{"edges", r.edges},
          {"bound", r.bound},
          {"equality", r.equality},
          {"fully_reducible", r.fully_reducible},
          {"consistent", r.consistent}};
}

inline Json to_json(const Theorem4Record& r) {
  return {{"fully_reducible", r.fully_reducible}, {"n", r.n}, {"m", r.m}, {"implication_holds", r.implication_holds}};
}

inline Json to_json(const DeletionCheck& c) {
  return {{"surface", c.surface},
          {"regions_before", c.regions_before},
          {"regions_after", c.regions_after},
          {"edges", c.edges},
          {"holds", c.holds}};
}

inline Json report_header(const std::string& id, const std::string& kind, int m, int n) {
  Json j;
  j["schema"] = "venn-report";
  j["version"] = 1;
  j["diagram"] = id;
  j["kind"] = kind;
  j["m"] = m;
  j["n"] = n;
  return j;
}

struct AnalysisReport {
  std::string id;
  std::string kind;
  int m = 0;
  int n = 0;
  std::size_t regions = 0;
  std::optional<std::size_t> edges;
  std::map<int, std::size_t> edges_per_surface;
  bool is_venn = false;
  std::optional<bool> is_simple;
  std::optional<bool> is_reducible;
  std::optional<bool> is_fully_reducible;
  std::optional<SubsetWitness> minimal_non_venn;
  std::map<int, SubsetWitness> corollary1;
  std::optional<bool> lemma1;
  std::optional<bool> deletion_identity;
  std::optional<bool> lemma2;
  std::optional<Theorem3Record> theorem3;
  std::optional<Theorem4Record> theorem4;
};

// Runs every check whose preconditions hold.
inline AnalysisReport analyze(Analyzer& a, const std::string& id, const std::string& kind) {
  AnalysisReport r;
  r.id = id;
  r.kind = kind;
  r.m = a.m();
  r.n = a.n();
  r.regions = a.region_count();
  r.is_venn = a.is_venn();
  if (a.has_geometry()) {
    r.is_simple = a.is_simple();
    r.edges_per_surface = a.edges();
    r.edges = a.total_edges();
  }
  if (r.is_venn) {
    r.is_reducible = a.is_reducible();
    const auto full = a.fully_reducible_bruteforce();
    r.is_fully_reducible = full.holds;
    r.minimal_non_venn = full.witness;
    bool lemma1 = true;
    for (int k = 0; k <= a.n() && lemma1; ++k) a.for_each_subset(k, [&](SurfaceSet s) { return lemma1 = a.check_lemma1(s); });
    r.lemma1 = lemma1;
  }
  if (r.is_simple.value_or(false)) {
    bool ok = true;
    for (const auto& c : a.deletion_identity()) ok = ok && c.holds;
    r.deletion_identity = ok;
    if (r.is_venn) {
      if (!*r.is_fully_reducible) r.corollary1 = a.corollary1_witnesses();
      if (a.n() >= 2) r.theorem3 = a.theorem3_check();
      r.theorem4 = a.theorem4_check();
      if (*r.is_fully_reducible && a.n() >= 1) {
        bool venn = true;
        for (int i : a.surfaces().ids()) venn = venn && a.projection_census(i).is_venn();
        r.lemma2 = venn;
      }
    }
  }
  return r;
}

template <class T>
Json opt_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_arithmetic_v<T>) {
    return *v;
  } else {
    return to_json(*v);
  }
}

inline Json to_json(const AnalysisReport& r) {
  Json j = report_header(r.id, r.kind, r.m, r.n);
  Json per = Json::object();
  for (const auto& [c, e] : r.edges_per_surface) per[std::to_string(c)] = e;
  j["metrics"] = {{"regions", r.regions}, {"edges", opt_json(r.edges)}, {"edges_per_surface", per}};
  j["flags"] = {{"venn", r.is_venn},
                {"simple", opt_json(r.is_simple)},
                {"reducible", opt_json(r.is_reducible)},
                {"fully_reducible", opt_json(r.is_fully_reducible)}};
  Json cor = Json::object();
  for (const auto& [k, w] : r.corollary1) cor[std::to_string(k)] = to_json(w);
  j["witnesses"] = {{"minimal_non_venn", opt_json(r.minimal_non_venn)}, {"corollary1", cor}};
  j["checks"] = {{"lemma1", opt_json(r.lemma1)},
                 {"deletion_identity", opt_json(r.deletion_identity)},
                 {"lemma2", opt_json(r.lemma2)},
                 {"theorem3", opt_json(r.theorem3)},
                 {"theorem4", opt_json(r.theorem4)}};
  return j;
}

}  // namespace venn
