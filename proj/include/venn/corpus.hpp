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

// The constructed diagrams every theorem check is swept over.

#pragma once

#include <string>
#include <vector>

#include "venn/edwards.hpp"
#include "venn/grid.hpp"
#include "venn/io.hpp"
#include "venn/lift.hpp"
#include "venn/map_builders.hpp"
#include "venn/trace.hpp"

namespace venn {

struct CorpusEntry {
  std::string id;
  std::string origin;  // circles | edwards | lift | trace
  Diagram diagram;
  int m = 2;
  int n = 0;
  bool exploratory = false;
  std::vector<LiftOrder> lift_orders;  // lifts only, innermost first
};

struct CorpusOptions {
  std::size_t resolution = 1024;     // 2D Edwards grids
  std::size_t lift_resolution = 128;  // base grids for prism lifts
  int edwards_max = 6;
  int trace_max = 6;
  bool exploratory = true;  // include the 3D 5-Venn lift
};

inline std::vector<CorpusEntry> build_corpus(const CorpusOptions& opt = {}) {
  std::vector<CorpusEntry> out;
  for (int n = 1; n <= 3; ++n) out.push_back({"circles-n" + std::to_string(n), "circles", builtin_map(n), 2, n, false, {}});
  for (int n = 2; n <= opt.edwards_max; ++n) {
    GridDiagram g = edwards_grid(n, opt.resolution);
    if (n <= opt.trace_max) out.push_back({"traced-n" + std::to_string(n), "trace", trace_map(g), 2, n, false, {}});
    out.push_back({"edwards-n" + std::to_string(n), "edwards", std::move(g), 2, n, false, {}});
  }
  // 3D lifts of up to four surfaces and both 4D lifts are asked to be fully
  // reducible; the 3D 5-Venn lift only to be Venn.
  for (int n = 2; n <= 5; ++n) {
    const bool exploratory = n == 5;
    if (exploratory && !opt.exploratory) continue;
    const GridDiagram base = edwards_grid(n, opt.lift_resolution);
    const auto orders = find_lift_orders(base, {1, !exploratory});
    if (!orders) throw Error("no Venn stagger order for the 3D lift of " + std::to_string(n) + " surfaces");
    out.push_back({"lift3d-n" + std::to_string(n), "lift", lift_prism(base, orders->front()), 3, n, exploratory, *orders});
  }
  for (int n = 4; n <= 5; ++n) {
    const GridDiagram base = edwards_grid(n, opt.lift_resolution);
    const auto orders = find_lift_orders(base, {2, true});
    if (!orders) throw Error("no Venn stagger orders for the 4D lift of " + std::to_string(n) + " surfaces");
    GridDiagram twice = lift_prism(lift_prism(base, (*orders)[0]), (*orders)[1]);
    out.push_back({"lift4d-n" + std::to_string(n), "lift", std::move(twice), 4, n, false, *orders});
  }
  return out;
}

}  // namespace venn
