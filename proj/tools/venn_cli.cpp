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

// venn: construct, check, analyze and render generalized Venn diagrams.
//
// Exit codes: 0 the checked property holds, 1 it fails, 2 bad input or an
// unmet precondition.

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "venn/venn.hpp"

namespace {

using namespace venn;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kBadInput = 2;

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_text(out, text);
  }
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int i : v) s += (s.empty() ? "" : ",") + std::to_string(i);
  return s;
}

std::string order_text(const LiftOrder& o) { return "start " + join(o.start) + " end " + join(o.end); }

// Loads and validates; an invalid diagram is a precondition failure.
Diagram load(const std::string& path) {
  Diagram d = read_diagram(path);
  const ValidationReport report =
      std::visit([](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, CombinatorialMap>) {
          return validate_map(x);
        } else {
          return validate_grid(x);
        }
      }, d);
  if (!report.ok()) throw PreconditionError(path + ": " + report.summary());
  return d;
}

Analyzer make_analyzer(const Diagram& d) {
  return std::visit([](const auto& x) { return Analyzer(x); }, d);
}

std::string kind_of(const Diagram& d) { return std::holds_alternative<CombinatorialMap>(d) ? "map" : "grid"; }

// ---- construct ----------------------------------------------------------

struct ConstructArgs {
  int n = 3;
  std::size_t resolution = 1024;
  std::string in;
  std::string out;
  int times = 1;
  std::string order = "search";
};

int cmd_construct_circles(const ConstructArgs& a) {
  const CombinatorialMap map = builtin_map(a.n);
  Analyzer an(map);
  if (!an.is_venn()) {
    std::cerr << "construct circles: result is not Venn\n";
    return kFails;
  }
  emit(a.out, to_text(map));
  return kHolds;
}

int cmd_construct_edwards(const ConstructArgs& a) {
  if (a.n < 1) throw PreconditionError("construct edwards: --n must be >= 1");
  GridDiagram g = edwards_grid(a.n, a.resolution);
  Analyzer an(g);
  if (!an.is_venn() || !an.is_simple()) {
    std::cerr << "construct edwards: verification failed (venn=" << an.is_venn() << ", simple=" << an.is_simple() << ")\n";
    return kFails;
  }
  emit(a.out, to_text(g));
  return kHolds;
}

int cmd_construct_lift(const ConstructArgs& a) {
  if (a.in.empty()) throw PreconditionError("construct lift: --in is required");
  if (a.times < 1) throw PreconditionError("construct lift: --times must be >= 1");
  Diagram d = load(a.in);
  if (!std::holds_alternative<GridDiagram>(d)) throw PreconditionError("construct lift: input must be a grid");
  GridDiagram g = std::get<GridDiagram>(std::move(d));
  std::vector<LiftOrder> orders;
  if (a.order == "index") {
    orders.assign(static_cast<std::size_t>(a.times), LiftOrder::identity(g.surfaces()));
  } else {
    const bool want_full = g.surfaces() <= g.dimension() + a.times + 1;
    auto found = find_lift_orders(g, {a.times, want_full});
    if (!found && want_full) found = find_lift_orders(g, {a.times, false});
    if (!found) {
      std::cerr << "construct lift: no stagger order gives a Venn lift\n";
      return kFails;
    }
    orders = *found;
  }
  for (const auto& o : orders) {
    std::cerr << "lift order " << order_text(o) << "\n";
    g = lift_prism(g, o);
  }
  Analyzer an(g);
  if (!an.is_venn()) {
    std::cerr << "construct lift: lifted diagram is not Venn (" << an.region_count() << " regions)\n";
    return kFails;
  }
  emit(a.out, to_text(g));
  return kHolds;
}

// ---- check --------------------------------------------------------------

struct CheckArgs {
  std::string file;
  std::string which = "venn";
  int r = 0;
  std::string out;
};

Json census_json(const Census& c) {
  Json j;
  j["regions"] = c.region_count();
  j["labels"] = c.label_count();
  j["expected_labels"] = std::size_t{1} << c.scope.size();
  if (auto l = c.disconnected_label()) {
    j["disconnected_label"] = c.sign_of(*l).to_string();
  } else {
    j["disconnected_label"] = nullptr;
  }
  return j;
}

int cmd_check(const CheckArgs& a) {
  const Diagram d = load(a.file);
  Analyzer an = make_analyzer(d);
  Json j = report_header(a.file, kind_of(d), an.m(), an.n());
  j["check"] = a.which;
  bool holds = false;
  const std::string& w = a.which;
  if (w == "venn") {
    holds = an.is_venn();
    j["census"] = census_json(an.census());
  } else if (w == "simple") {
    holds = an.is_simple();
  } else if (w == "reducible") {
    holds = an.is_reducible();
  } else if (w == "fully") {
    const auto res = an.fully_reducible_bruteforce();
    holds = res.holds;
    j["witness"] = res.witness ? to_json(*res.witness) : Json(nullptr);
  } else if (w == "thm2") {
    std::vector<int> rs;
    if (a.r != 0) {
      rs.push_back(a.r);
    } else {
      for (int r = 2; r < an.n(); ++r) rs.push_back(r);
    }
    if (rs.empty()) throw PreconditionError("thm2: needs n >= 3");
    const auto brute = an.fully_reducible_bruteforce();
    holds = true;
    Json per = Json::array();
    for (int r : rs) {
      const auto via = an.fully_reducible_via_r(r);
      const bool agree = via.holds == brute.holds;
      holds = holds && agree;
      per.push_back({{"r", r},
                     {"via_r", via.holds},
                     {"witness", via.witness ? to_json(*via.witness) : Json(nullptr)},
                     {"agrees", agree}});
    }
    j["bruteforce"] = brute.holds;
    j["results"] = per;
  } else if (w == "thm3") {
    const auto rec = an.theorem3_check();
    holds = rec.consistent;
    j["theorem3"] = to_json(rec);
  } else if (w == "thm4") {
    const auto rec = an.theorem4_check();
    holds = rec.implication_holds;
    j["theorem4"] = to_json(rec);
  } else if (w == "cor1") {
    const auto wit = an.corollary1_witnesses();
    Json per = Json::object();
    for (const auto& [r, x] : wit) per[std::to_string(r)] = to_json(x);
    holds = wit.size() == static_cast<std::size_t>(std::max(0, an.n() - 2));
    j["witnesses"] = per;
  } else if (w == "lemma1") {
    holds = true;
    for (int k = 0; k <= an.n() && holds; ++k) an.for_each_subset(k, [&](SurfaceSet s) { return holds = an.check_lemma1(s); });
  } else if (w == "lemma2") {
    holds = true;
    Json per = Json::object();
    for (int i : an.surfaces().ids()) {
      const Census c = an.projection_census(i);
      per[std::to_string(i)] = census_json(c);
      holds = holds && c.is_venn();
    }
    j["projections"] = per;
  } else if (w == "lemma3") {
    if (!std::holds_alternative<CombinatorialMap>(d)) throw PreconditionError("lemma3: needs a map");
    const auto wit = check_lemma3(std::get<CombinatorialMap>(d));
    holds = !wit;
    if (wit) j["witness"] = {{"face", wit->face}, {"curve", wit->curve}, {"darts", wit->darts}};
  } else if (w == "deletion") {
    holds = true;
    Json per = Json::array();
    for (const auto& c : an.deletion_identity()) {
      per.push_back(to_json(c));
      holds = holds && c.holds;
    }
    j["deletion"] = per;
  } else {
    throw PreconditionError("unknown check '" + w + "'");
  }
  j["holds"] = holds;
  emit(a.out, dump(j));
  return holds ? kHolds : kFails;
}

int cmd_analyze(const std::string& file, const std::string& out) {
  const Diagram d = load(file);
  Analyzer an = make_analyzer(d);
  const AnalysisReport r = analyze(an, file, kind_of(d));
  Json j = to_json(r);
  if (const auto* map = std::get_if<CombinatorialMap>(&d)) j["checks"]["lemma3"] = !check_lemma3(*map);
  emit(out, dump(j));
  return kHolds;
}

// ---- conjecture ---------------------------------------------------------

struct ConjectureArgs {
  int m = 3;
  int n = 5;
  int m_max = 12;
  std::size_t resolution = 1024;
  std::string out;
};

int cmd_bound(const ConjectureArgs& a) {
  std::cout << conj3_bound(a.m, a.n).str() << "\n";
  return kHolds;
}

int cmd_coefficients(const ConjectureArgs& a) {
  const BoundTable t = conj3_coefficients(a.m);
  std::cout << "m=" << a.m;
  for (std::size_t j = 0; j < t.coefficients.size(); ++j) std::cout << " a" << j << "=" << to_string(t.coefficients[j]);
  std::cout << "\nconsistent " << (bound_consistency(a.m) ? "true" : "false") << "\n";
  return bound_consistency(a.m) ? kHolds : kFails;
}

int cmd_detid(const ConjectureArgs& a) {
  bool all = true;
  for (int m = 3; m <= a.m_max; ++m) {
    const DetIdentity d = det_identity_check(m);
    std::cout << "m=" << m << " lhs=" << d.lhs.str() << " rhs=" << d.rhs.str() << (d.equal ? " equal" : " DIFFER") << "\n";
    all = all && d.equal;
  }
  std::cout << (all ? "all equal" : "identity fails") << "\n";
  return all ? kHolds : kFails;
}

int cmd_recurrence(const ConjectureArgs& a) {
  const BigInt rec = recurrence_edges(a.m, a.n);
  std::cout << rec.str() << "\n";
  if (a.n > a.m + 1) {
    std::cerr << "warning: n > m+1; the recurrence extrapolates beyond the regime where it is derived\n";
  }
  return kHolds;
}

std::string cell(const std::optional<bool>& v) { return v ? (*v ? "yes" : "no") : "-"; }

int cmd_scan(const ConjectureArgs& a) {
  CorpusOptions opt;
  opt.resolution = a.resolution;
  const auto corpus = build_corpus(opt);
  std::ostringstream table;
  table << std::left << std::setw(12) << "diagram" << std::setw(3) << "m" << std::setw(3) << "n" << std::setw(8) << "regions"
        << std::setw(6) << "edges" << std::setw(7) << "bound" << std::setw(6) << "venn" << std::setw(7) << "simple"
        << std::setw(7) << "fully" << std::setw(6) << "thm3" << std::setw(6) << "thm4" << std::setw(7) << "lemma1"
        << std::setw(9) << "deletion" << std::setw(7) << "lemma2" << "conj1\n";
  Json reports = Json::array();
  bool all = true;
  for (const auto& e : corpus) {
    Analyzer an = make_analyzer(e.diagram);
    const AnalysisReport r = analyze(an, e.id, kind_of(e.diagram));
    Json j = to_json(r);
    std::optional<bool> lemma3;
    if (const auto* map = std::get_if<CombinatorialMap>(&e.diagram)) {
      lemma3 = !check_lemma3(*map);
      j["checks"]["lemma3"] = *lemma3;
    }
    // Conjecture 1 evidence: n <= m+1 should force full reducibility.
    std::optional<bool> conj1;
    if (r.is_fully_reducible && r.n <= r.m + 1) conj1 = *r.is_fully_reducible;
    j["conjecture1"] = opt_json(conj1);
    reports.push_back(std::move(j));
    const std::string bound = r.n >= 2 ? std::to_string(static_cast<std::size_t>(r.n) << (r.n - 1)) : "-";
    table << std::setw(12) << e.id << std::setw(3) << r.m << std::setw(3) << r.n << std::setw(8) << r.regions << std::setw(6)
          << (r.edges ? std::to_string(*r.edges) : "-") << std::setw(7) << bound << std::setw(6) << (r.is_venn ? "yes" : "no")
          << std::setw(7) << cell(r.is_simple) << std::setw(7) << cell(r.is_fully_reducible) << std::setw(6)
          << cell(r.theorem3 ? std::optional<bool>(r.theorem3->consistent) : std::nullopt) << std::setw(6)
          << cell(r.theorem4 ? std::optional<bool>(r.theorem4->implication_holds) : std::nullopt) << std::setw(7)
          << cell(r.lemma1) << std::setw(9) << cell(r.deletion_identity) << std::setw(7) << cell(r.lemma2) << cell(conj1)
          << (e.exploratory ? "  (exploratory)" : "") << "\n";
    if (!e.exploratory) {
      all = all && r.is_venn && r.lemma1.value_or(true) && r.deletion_identity.value_or(true) && r.lemma2.value_or(true) &&
            lemma3.value_or(true) && (!r.theorem3 || r.theorem3->consistent) && (!r.theorem4 || r.theorem4->implication_holds);
    }
  }
  std::cout << table.str();
  if (!a.out.empty()) write_text(a.out, dump(reports));
  return all ? kHolds : kFails;
}

// ---- render -------------------------------------------------------------

int cmd_render(const std::string& file, const std::string& out, const std::vector<std::string>& slices, bool labels) {
  const Diagram d = load(file);
  SvgOptions opt;
  opt.labels = labels;
  if (const auto* map = std::get_if<CombinatorialMap>(&d)) {
    if (!slices.empty()) throw PreconditionError("render: --slice applies to grids only");
    emit(out, render_map_svg(*map, opt));
    return kHolds;
  }
  GridDiagram g = std::get<GridDiagram>(d);
  std::map<int, std::size_t> fixed;
  for (const auto& s : slices) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw PreconditionError("render: --slice expects axis=value");
    int axis = 0;
    long long value = 0;
    try {
      axis = std::stoi(s.substr(0, eq));
      value = std::stoll(s.substr(eq + 1));
    } catch (const std::exception&) {
      throw PreconditionError("render: --slice expects integers, got '" + s + "'");
    }
    if (axis < 1 || axis > g.dimension()) throw PreconditionError("render: slice axis out of range (axes are 1-based)");
    if (value < 0 || static_cast<std::size_t>(value) >= g.shape()[static_cast<std::size_t>(axis - 1)]) {
      throw PreconditionError("render: slice value out of range");
    }
    fixed[axis - 1] = static_cast<std::size_t>(value);
  }
  if (!fixed.empty()) g = slice_grid(g, fixed);
  if (g.dimension() != 2) throw PreconditionError("render: needs a 2D diagram; slice higher dimensions with --slice");
  emit(out, render_grid_svg(g, opt));
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and check generalized Venn diagrams"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a diagram file");
  construct->require_subcommand(1);
  auto* c_circles = construct->add_subcommand("circles", "Classical 1-3 circle diagram (map)");
  c_circles->add_option("--n", ca.n, "number of circles")->check(CLI::Range(1, 3));
  c_circles->add_option("--out,-o", ca.out, "output file (stdout if omitted)");
  auto* c_edwards = construct->add_subcommand("edwards", "Edwards cogwheel diagram (2D grid)");
  c_edwards->add_option("--n", ca.n, "number of curves")->required();
  c_edwards->add_option("--resolution", ca.resolution, "cells per axis");
  c_edwards->add_option("--out,-o", ca.out, "output file (stdout if omitted)");
  auto* c_lift = construct->add_subcommand("lift", "Prism lift of a grid diagram");
  c_lift->add_option("--in", ca.in, "input grid file")->required();
  c_lift->add_option("--times", ca.times, "number of lifts");
  c_lift->add_option("--order", ca.order, "stagger order: search (default) or index")->check(CLI::IsMember({"search", "index"}));
  c_lift->add_option("--out,-o", ca.out, "output file (stdout if omitted)");

  CheckArgs ka;
  auto* check = app.add_subcommand("check", "Check one property; exit 0 iff it holds");
  check->add_option("file", ka.file, "diagram file")->required();
  check->add_option("--which", ka.which, "venn|simple|reducible|fully|thm2|thm3|thm4|cor1|lemma1|lemma2|lemma3|deletion");
  check->add_option("--r", ka.r, "subset size for thm2 (all 1<r<n if omitted)");
  check->add_option("--out,-o", ka.out, "report file (stdout if omitted)");

  std::string analyze_file, analyze_out;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full JSON report");
  analyze_cmd->add_option("file", analyze_file, "diagram file")->required();
  analyze_cmd->add_option("--out,-o", analyze_out, "report file (stdout if omitted)");

  ConjectureArgs ja;
  auto* conj = app.add_subcommand("conjecture", "Edge-bound numerics and corpus scan");
  conj->require_subcommand(1);
  auto* j_bound = conj->add_subcommand("bound", "B(m, n)");
  j_bound->add_option("--m", ja.m)->required();
  j_bound->add_option("--n", ja.n)->required();
  auto* j_coef = conj->add_subcommand("coefficients", "a_0..a_{m-2} of B(m, n)");
  j_coef->add_option("--m", ja.m)->required();
  auto* j_detid = conj->add_subcommand("detid", "Determinant identity for 3 <= m <= m-max");
  j_detid->add_option("--m-max", ja.m_max);
  auto* j_rec = conj->add_subcommand("recurrence", "Edge recurrence e(m, n)");
  j_rec->add_option("--m", ja.m)->required();
  j_rec->add_option("--n", ja.n)->required();
  auto* j_scan = conj->add_subcommand("scan", "Every check over the constructed corpus");
  j_scan->add_option("--resolution", ja.resolution, "2D Edwards resolution");
  j_scan->add_option("--out,-o", ja.out, "write the JSON reports here");

  std::string render_file, render_out;
  std::vector<std::string> slices;
  bool labels = false;
  auto* render = app.add_subcommand("render", "SVG of a 2D diagram or a slice");
  render->add_option("file", render_file, "diagram file")->required();
  render->add_option("--out,-o", render_out, "SVG file (stdout if omitted)");
  render->add_option("--slice", slices, "fix an axis, 1-based: axis=value");
  render->add_flag("--labels", labels, "label regions with sign vectors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }

  try {
    if (c_circles->parsed()) return cmd_construct_circles(ca);
    if (c_edwards->parsed()) return cmd_construct_edwards(ca);
    if (c_lift->parsed()) return cmd_construct_lift(ca);
    if (check->parsed()) return cmd_check(ka);
    if (analyze_cmd->parsed()) return cmd_analyze(analyze_file, analyze_out);
    if (j_bound->parsed()) return cmd_bound(ja);
    if (j_coef->parsed()) return cmd_coefficients(ja);
    if (j_detid->parsed()) return cmd_detid(ja);
    if (j_rec->parsed()) return cmd_recurrence(ja);
    if (j_scan->parsed()) return cmd_scan(ja);
    if (render->parsed()) return cmd_render(render_file, render_out, slices, labels);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kBadInput;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFails;
  }
  return kBadInput;
}
