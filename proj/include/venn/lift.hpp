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

// Choosing the stagger order of a prism lift.
//
// With the index order some lifts are not Venn. For the 4-curve Edwards
// diagram, the layer where only surfaces 3 and 4 are active holds a piece of
// the "inside 3 only" region that touches no other piece of it. Whether a
// lift is Venn depends only on the region graph of the base, so orders are
// screened on regions x layers before any grid is built.

#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "venn/analysis.hpp"
#include "venn/grid.hpp"

namespace venn {

// Region graph of the lift of a diagram with region graph `base`.
inline LabeledComplex lift_region_graph(const LabeledComplex& base, int n, const LiftOrder& order = {}) {
  const auto mask = lift_layer_masks(n, order);
  const std::size_t depth = mask.size();
  const Label ext = low_bits(n);
  std::vector<Label> labels;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  labels.reserve(base.cell_count() * depth);
  for (std::size_t r = 0; r < base.cell_count(); ++r) {
    const Label interior = ~base.label(r) & ext;
    for (std::size_t t = 0; t < depth; ++t) {
      labels.push_back(ext & ~(interior & mask[t]));
      if (t + 1 < depth) edges.emplace_back(static_cast<std::uint32_t>(r * depth + t), static_cast<std::uint32_t>(r * depth + t + 1));
    }
  }
  base.for_each_adjacency([&](std::uint32_t a, std::uint32_t b) {
    for (std::size_t t = 0; t < depth; ++t) {
      edges.emplace_back(static_cast<std::uint32_t>(a * depth + t), static_cast<std::uint32_t>(b * depth + t));
    }
  });
  return region_graph(LabeledComplex(n, std::move(labels), std::move(edges)), n);
}

struct LiftGoal {
  int lifts = 1;
  bool fully_reducible = false;  // demanded of the last lift only
};

namespace detail {

inline bool search_lifts(const LabeledComplex& base, int n, int dimension, const LiftGoal& goal, std::vector<LiftOrder>& out) {
  std::vector<int> start(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) start[static_cast<std::size_t>(i)] = i + 1;
  const bool last = static_cast<int>(out.size()) + 1 == goal.lifts;
  do {
    std::vector<int> end = start;
    std::sort(end.begin(), end.end());
    do {
      LiftOrder order{start, end};
      LabeledComplex lifted = lift_region_graph(base, n, order);
      Analyzer a(lifted, dimension + 1);
      if (!a.is_venn()) continue;
      out.push_back(order);
      if (last) {
        if (!goal.fully_reducible || a.fully_reducible_bruteforce().holds) return true;
      } else if (search_lifts(lifted, n, dimension + 1, goal, out)) {
        return true;
      }
      out.pop_back();
    } while (std::next_permutation(end.begin(), end.end()));
  } while (std::next_permutation(start.begin(), start.end()));
  return false;
}

}  // namespace detail

// First orders, in lexicographic (start, end) order at every level, whose
// lifts are all Venn. The index order is tried first. Empty when none exist.
inline std::optional<std::vector<LiftOrder>> find_lift_orders(const GridDiagram& g, const LiftGoal& goal = {}) {
  if (goal.lifts < 1) throw PreconditionError("find_lift_orders: needs at least one lift");
  if (g.surfaces() > 8) throw BudgetError("find_lift_orders: more than 8 surfaces");
  std::vector<LiftOrder> out;
  if (!detail::search_lifts(region_graph(g, g.surfaces()), g.surfaces(), g.dimension(), goal, out)) return std::nullopt;
  return out;
}

}  // namespace venn
