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

// Venn, simplicity and reducibility decisions plus theorem checkers.
//
// Every diagram is first collapsed to its region graph: one node per
// connected region of the full diagram, labeled with its sign bits in the
// original surface positions, adjacent when the regions touch. Restricting
// to a subset of surfaces only merges regions, so every subset census runs
// on this small graph.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "venn/complex.hpp"
#include "venn/grid.hpp"
#include "venn/grid_faces.hpp"
#include "venn/map.hpp"

namespace venn {

// Quotient of a cell complex by its full-label components.
template <CellComplex C>
LabeledComplex region_graph(const C& complex, int label_bits) {
  const std::size_t n = complex.cell_count();
  DisjointSets sets(n);
  complex.for_each_adjacency([&](std::uint32_t a, std::uint32_t b) {
    if (complex.label(a) == complex.label(b)) sets.unite(a, b);
  });
  std::vector<std::uint32_t> region(n);
  std::vector<Label> labels;
  for (std::uint32_t c = 0; c < n; ++c) {
    if (sets.is_root(c)) {
      region[c] = static_cast<std::uint32_t>(labels.size());
      labels.push_back(complex.label(c));
    } else {
      region[c] = region[sets.find(c)];
    }
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  complex.for_each_adjacency([&](std::uint32_t a, std::uint32_t b) {
    if (region[a] != region[b]) edges.emplace_back(std::min(region[a], region[b]), std::max(region[a], region[b]));
  });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return LabeledComplex(label_bits, std::move(labels), std::move(edges));
}

// Regions of a map (piece faces, then free-curve interiors) adjacent across
// arcs and across free curves.
inline LabeledComplex map_region_graph(const CombinatorialMap& map) {
  const auto regions = faces_with_signs(map);
  std::vector<Label> labels;
  for (const auto& r : regions) labels.push_back(r.label);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<int> face_of;
  std::uint32_t face_regions = 1;  // the pieceless outside
  if (map.dart_count() > 0) {
    const MapTopology topo = map_topology(map);
    face_of = topo.face_of;
    face_regions = static_cast<std::uint32_t>(topo.face_count);
    for (int d = 0; d < map.dart_count(); ++d) {
      const auto a = static_cast<std::uint32_t>(topo.face_of[static_cast<std::size_t>(d)]);
      const auto b = static_cast<std::uint32_t>(topo.face_of[static_cast<std::size_t>(map.pair[static_cast<std::size_t>(d)])]);
      if (a != b) edges.emplace_back(a, b);
    }
  }
  std::map<int, std::uint32_t> interior_of;
  for (std::size_t k = 0; k < map.free_curves.size(); ++k) {
    interior_of[map.free_curves[k].curve] = face_regions + static_cast<std::uint32_t>(k);
  }
  for (std::size_t k = 0; k < map.free_curves.size(); ++k) {
    const FreeCurve& f = map.free_curves[k];
    std::uint32_t outside = 0;
    if (f.parent != 0) {
      outside = interior_of.at(f.parent);
    } else if (f.host_dart >= 0) {
      outside = static_cast<std::uint32_t>(face_of[static_cast<std::size_t>(f.host_dart)]);
    }
    edges.emplace_back(outside, face_regions + static_cast<std::uint32_t>(k));
  }
  int bits = 0;
  for (int c : map.curves) bits = std::max(bits, c);
  return LabeledComplex(bits, std::move(labels), std::move(edges));
}

struct SubsetWitness {
  SurfaceSet subset;
  Label label = 0;        // a label with several components (original positions)
  std::size_t components = 0;
  std::size_t regions = 0;  // total components of the restriction
};

struct Theorem3Record {
  std::size_t edges = 0;
  std::size_t bound = 0;  // n 2^(n-1)
  bool equality = false;
  bool fully_reducible = false;
  bool consistent = false;
};

struct Theorem4Record {
  bool fully_reducible = false;
  int n = 0;
  int m = 0;
  bool implication_holds = false;
};

struct DeletionCheck {
  int surface = 0;
  std::size_t regions_before = 0;
  std::size_t regions_after = 0;
  std::size_t edges = 0;
  bool holds = false;
};

struct ReducibilityResult {
  bool holds = false;
  std::optional<SubsetWitness> witness;  // first failing subset
};

// Decision procedures over one diagram. An analyzer built from an lvalue
// refers to it, so that diagram must outlive the analyzer; one built from an
// rvalue keeps the diagram alive itself.
class Analyzer {
 public:
  explicit Analyzer(const CombinatorialMap& map)
      : surfaces_(map.curve_set()), dimension_(2), graph_(map_region_graph(map)) {
    bind(map);
  }

  explicit Analyzer(CombinatorialMap&& map) : Analyzer(std::make_shared<const CombinatorialMap>(std::move(map))) {}

  explicit Analyzer(const GridDiagram& g)
      : surfaces_(SurfaceSet::all(g.surfaces())), dimension_(g.dimension()), graph_(region_graph(g, g.surfaces())) {
    bind(g);
  }

  explicit Analyzer(GridDiagram&& g) : Analyzer(std::make_shared<const GridDiagram>(std::move(g))) {}

  // A bare complex carries no geometry: simplicity and edges are unknown.
  Analyzer(const LabeledComplex& complex, int dimension)
      : surfaces_(SurfaceSet::all(complex.label_bits())),
        dimension_(dimension),
        graph_(region_graph(complex, complex.label_bits())) {}

  SurfaceSet surfaces() const { return surfaces_; }
  int n() const { return surfaces_.size(); }
  int m() const { return dimension_; }
  const LabeledComplex& region_graph_view() const { return graph_; }

  const Census& census(SurfaceSet scope) {
    if (!scope.subset_of(surfaces_)) throw PreconditionError("census: subset " + scope.to_string() + " not in diagram");
    auto it = cache_.find(scope.bits());
    if (it == cache_.end()) it = cache_.emplace(scope.bits(), region_census(graph_, scope)).first;
    return it->second;
  }

  const Census& census() { return census(surfaces_); }
  std::size_t region_count() { return census().region_count(); }

  bool is_venn() { return census().is_venn(); }
  bool is_venn(SurfaceSet subset) { return census(subset).is_venn(); }

  bool has_geometry() const { return static_cast<bool>(simple_source_); }

  bool is_simple() {
    if (!simple_source_) throw PreconditionError("is_simple: diagram has no geometry");
    if (!simple_) simple_ = simple_source_();
    return *simple_;
  }

  const std::map<int, std::size_t>& edges() {
    if (!edge_source_) throw PreconditionError("edge counts: diagram has no geometry");
    if (!edges_) edges_ = edge_source_();
    return *edges_;
  }

  std::size_t total_edges() {
    std::size_t total = 0;
    for (const auto& [c, e] : edges()) total += e;
    return total;
  }

  // Maps position-based subsets of {1..n} onto the diagram's surface ids.
  SurfaceSet to_surfaces(SurfaceSet positions) const {
    return SurfaceSet(expand_bits(positions.bits(), surfaces_.bits()));
  }

  // Visits subsets of size r in colex order of positions until f returns false.
  template <class F>
  void for_each_subset(int r, F&& f) const {
    for_each_subset_of_size(n(), r, [&](SurfaceSet positions) { return f(to_surfaces(positions)); });
  }

  bool check_lemma1(SurfaceSet subset) { return census(subset).has_all_labels(); }

  bool is_reducible() {
    require_venn("is_reducible");
    bool found = false;
    for_each_subset(n() - 1, [&](SurfaceSet s) {
      found = is_venn(s);
      return !found;
    });
    return found;
  }

  // Every restriction Venn; the witness is the first failing subset by size,
  // then colex order.
  ReducibilityResult fully_reducible_bruteforce() {
    require_venn("is_fully_reducible_bruteforce");
    if (n() > 20) throw BudgetError("brute force refused for n > 20");
    ReducibilityResult result;
    result.holds = true;
    for (int r = 0; r <= n() && result.holds; ++r) {
      for_each_subset(r, [&](SurfaceSet s) {
        if (!is_venn(s)) {
          result.holds = false;
          result.witness = witness_for(s);
        }
        return result.holds;
      });
    }
    return result;
  }

  ReducibilityResult fully_reducible_via_r(int r) {
    require_venn("fully_reducible_via_r");
    require_simple("fully_reducible_via_r");
    if (r <= 1 || r >= n()) {
      throw PreconditionError("fully_reducible_via_r: need 1 < r < n (r=" + std::to_string(r) + ", n=" + std::to_string(n()) + ")");
    }
    ReducibilityResult result;
    result.holds = true;
    for_each_subset(r, [&](SurfaceSet s) {
      if (!is_venn(s)) {
        result.holds = false;
        result.witness = witness_for(s);
      }
      return result.holds;
    });
    return result;
  }

  // For every 1 < r < n, the first r-subset with a disconnected label.
  std::map<int, SubsetWitness> corollary1_witnesses() {
    require_venn("corollary1_witnesses");
    require_simple("corollary1_witnesses");
    if (fully_reducible_bruteforce().holds) {
      throw PreconditionError("corollary1_witnesses: diagram is fully reducible");
    }
    std::map<int, SubsetWitness> out;
    for (int r = 2; r < n(); ++r) {
      for_each_subset(r, [&](SurfaceSet s) {
        const Census& c = census(s);
        if (c.region_count() > (std::size_t{1} << r) && c.disconnected_label()) {
          out[r] = witness_for(s);
          return false;
        }
        return true;
      });
      if (!out.contains(r)) {
        throw Error("corollary1_witnesses: no subset of size " + std::to_string(r) + " has a disconnected region");
      }
    }
    return out;
  }

  Theorem3Record theorem3_check() {
    require_venn("theorem3_check");
    require_simple("theorem3_check");
    if (n() < 2) throw PreconditionError("theorem3_check: needs n >= 2");
    Theorem3Record rec;
    rec.edges = total_edges();
    rec.bound = static_cast<std::size_t>(n()) << (n() - 1);
    rec.equality = rec.edges == rec.bound;
    rec.fully_reducible = fully_reducible_bruteforce().holds;
    rec.consistent = rec.edges <= rec.bound && rec.equality == rec.fully_reducible;
    return rec;
  }

  Theorem4Record theorem4_check() {
    require_venn("theorem4_check");
    require_simple("theorem4_check");
    Theorem4Record rec;
    rec.fully_reducible = fully_reducible_bruteforce().holds;
    rec.n = n();
    rec.m = m();
    rec.implication_holds = !rec.fully_reducible || rec.n <= rec.m + 1;
    return rec;
  }

  // r(V) - r(V minus S_i) = e_V(S_i) for every surface.
  std::vector<DeletionCheck> deletion_identity() {
    require_simple("deletion_identity");
    std::vector<DeletionCheck> out;
    const std::size_t before = region_count();
    for (int i : surfaces_.ids()) {
      DeletionCheck c;
      c.surface = i;
      c.regions_before = before;
      c.regions_after = census(surfaces_.without(i)).region_count();
      c.edges = edges().at(i);
      c.holds = c.regions_before - c.regions_after == c.edges && c.regions_before >= c.regions_after;
      out.push_back(c);
    }
    return out;
  }

  // Census of the complex induced on surface i (labels over the other n-1).
  Census projection_census(int surface) {
    if (!projection_source_) throw PreconditionError("projection: diagram has no geometry");
    if (!surfaces_.contains(surface)) throw PreconditionError("projection: unknown surface");
    return projection_source_(surface);
  }

 private:
  template <class D>
  explicit Analyzer(std::shared_ptr<const D> owned) : Analyzer(*owned) {
    owner_ = std::move(owned);
  }

  void bind(const CombinatorialMap& map) {
    simple_source_ = [&map] { return is_simple_map(map); };
    edge_source_ = [&map] {
      std::map<int, std::size_t> out;
      for (const auto& [c, e] : edge_counts(map).per_curve) out[c] = e;
      return out;
    };
    projection_source_ = [&map](int i) { return region_census(project_onto_curve(map, i)); };
  }

  void bind(const GridDiagram& g) {
    simple_source_ = [&g] { return validate_grid(g).ok(); };
    edge_source_ = [&g] {
      std::map<int, std::size_t> out;
      const auto counts = surface_edge_counts(g);
      for (std::size_t i = 0; i < counts.size(); ++i) out[static_cast<int>(i) + 1] = counts[i];
      return out;
    };
    projection_source_ = [&g](int i) { return region_census(project_onto_surface(g, i).complex); };
  }

  void require_venn(const char* op) {
    if (!is_venn()) throw PreconditionError(std::string(op) + ": diagram is not Venn");
  }
  void require_simple(const char* op) {
    if (!is_simple()) throw PreconditionError(std::string(op) + ": diagram is not simple");
  }

  SubsetWitness witness_for(SurfaceSet s) {
    const Census& c = census(s);
    SubsetWitness w;
    w.subset = s;
    w.regions = c.region_count();
    if (auto l = c.disconnected_label()) {
      w.label = *l;
      w.components = c.components.at(*l);
    } else {
      // Missing labels: report the first absent one.
      for (Label l = 0; l < (Label{1} << s.size()); ++l) {
        const Label full = expand_bits(l, s.bits());
        if (!c.components.contains(full)) {
          w.label = full;
          break;
        }
      }
    }
    return w;
  }

  SurfaceSet surfaces_;
  int dimension_ = 0;
  LabeledComplex graph_;
  std::map<Label, Census> cache_;
  std::function<bool()> simple_source_;
  std::optional<bool> simple_;
  std::function<std::map<int, std::size_t>()> edge_source_;
  std::optional<std::map<int, std::size_t>> edges_;
  std::function<Census(int)> projection_source_;
  std::shared_ptr<const void> owner_;
};

}  // namespace venn
