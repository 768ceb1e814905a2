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

// Recovers a combinatorial map from a clean, simple 2D grid.
//
// Curves are walked along grid edges with their interior on the left. Grid
// vertices where two surfaces cross become map vertices; the rotation there
// is the order of the outgoing directions E, N, W, S.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "venn/complex.hpp"
#include "venn/grid.hpp"
#include "venn/map.hpp"
#include "venn/map_builders.hpp"

namespace venn {

namespace detail {

struct GridWalker {
  const GridDiagram& g;
  std::size_t w, h;  // cells per axis; vertices are 0..w x 0..h

  static constexpr int dx[4] = {1, 0, -1, 0};
  static constexpr int dy[4] = {0, 1, 0, -1};

  // Label of cell (x, y); all-exterior outside the array.
  Label cell(std::int64_t x, std::int64_t y) const {
    if (x < 0 || y < 0 || x >= static_cast<std::int64_t>(w) || y >= static_cast<std::int64_t>(h)) return g.exterior();
    return g.label(static_cast<std::size_t>(x) * h + static_cast<std::size_t>(y));
  }

  // Cells left and right of the unit edge leaving vertex (vx, vy) in `dir`.
  Label left(std::int64_t vx, std::int64_t vy, int dir) const {
    static constexpr int lx[4] = {0, -1, -1, 0};
    static constexpr int ly[4] = {0, 0, -1, -1};
    return cell(vx + lx[dir], vy + ly[dir]);
  }
  Label right(std::int64_t vx, std::int64_t vy, int dir) const {
    static constexpr int rx[4] = {0, 0, -1, -1};
    static constexpr int ry[4] = {-1, 0, 0, -1};
    return cell(vx + rx[dir], vy + ry[dir]);
  }
  std::size_t left_cell(std::int64_t vx, std::int64_t vy, int dir) const {
    static constexpr int lx[4] = {0, -1, -1, 0};
    static constexpr int ly[4] = {0, 0, -1, -1};
    return static_cast<std::size_t>(vx + lx[dir]) * h + static_cast<std::size_t>(vy + ly[dir]);
  }
  std::size_t right_cell(std::int64_t vx, std::int64_t vy, int dir) const {
    static constexpr int rx[4] = {0, 0, -1, -1};
    static constexpr int ry[4] = {-1, 0, 0, -1};
    return static_cast<std::size_t>(vx + rx[dir]) * h + static_cast<std::size_t>(vy + ry[dir]);
  }

  // Surface `bit` runs along this edge with its interior on the left.
  bool oriented(std::int64_t vx, std::int64_t vy, int dir, Label bit) const {
    return (left(vx, vy, dir) & bit) == 0 && (right(vx, vy, dir) & bit) != 0;
  }

  // Two surfaces cross at the vertex.
  bool crossing(std::int64_t vx, std::int64_t vy) const {
    const Label a = cell(vx - 1, vy - 1), b = cell(vx, vy - 1), c = cell(vx - 1, vy), d = cell(vx, vy);
    return a != b && a != c && a != d && b != c && b != d && c != d;
  }
};

}  // namespace detail

inline CombinatorialMap trace_map(const GridDiagram& g) {
  if (g.dimension() != 2) throw PreconditionError("trace_map: grid must be 2D");
  const auto report = validate_grid(g);
  if (!report.ok()) throw PreconditionError("trace_map: grid invalid: " + report.summary());
  const detail::GridWalker walk{g, g.shape()[0], g.shape()[1]};
  const int n = g.surfaces();

  struct Visit {
    std::int64_t vx, vy;
    int out_dir;   // direction leaving the vertex
    int in_dir;    // direction arriving at the vertex
    std::size_t left_out;  // cell left of the outgoing edge
  };
  struct CurveTrace {
    std::vector<Visit> crossings;
    std::size_t outside_cell = 0;  // a cell just outside the curve
  };
  std::map<int, CurveTrace> traces;

  for (int i = 1; i <= n; ++i) {
    const Label bit = surface_bit(i);
    // First interior cell in index order; its bottom edge runs east with the
    // interior on the left.
    std::size_t start_cell = g.cell_count();
    for (std::size_t c = 0; c < g.cell_count(); ++c) {
      if ((g.label(c) & bit) == 0) {
        start_cell = c;
        break;
      }
    }
    if (start_cell == g.cell_count()) continue;
    const auto sx = static_cast<std::int64_t>(start_cell / walk.h);
    const auto sy = static_cast<std::int64_t>(start_cell % walk.h);
    // Cell (sx, sy) is the lowest interior cell in its column-major order, so
    // the cell below (sx, sy-1) is exterior unless sy == 0.
    std::int64_t vx = sx, vy = sy;
    int dir = 0;
    if (!walk.oriented(vx, vy, dir, bit)) throw Error("trace_map: unexpected start geometry on surface " + std::to_string(i));
    CurveTrace trace;
    trace.outside_cell = walk.right_cell(vx, vy, dir);
    std::size_t steps = 0;
    std::size_t facets = 0;
    for (std::size_t c = 0; c < g.cell_count(); ++c) {
      const auto x = c / walk.h, y = c % walk.h;
      if (x + 1 < walk.w && ((g.label(c) ^ g.label(c + walk.h)) & bit)) ++facets;
      if (y + 1 < walk.h && ((g.label(c) ^ g.label(c + 1)) & bit)) ++facets;
    }
    do {
      const std::int64_t nx = vx + detail::GridWalker::dx[dir];
      const std::int64_t ny = vy + detail::GridWalker::dy[dir];
      // Next edge: the unique oriented edge leaving (nx, ny) other than back.
      int next = -1;
      for (int turn : {1, 0, 3}) {  // left, straight, right
        const int cand = (dir + turn) % 4;
        if (walk.oriented(nx, ny, cand, bit)) {
          next = cand;
          break;
        }
      }
      if (next < 0) throw Error("trace_map: surface " + std::to_string(i) + " ends at a vertex");
      if (walk.crossing(nx, ny)) trace.crossings.push_back({nx, ny, next, dir, walk.left_cell(nx, ny, next)});
      vx = nx;
      vy = ny;
      dir = next;
      if (++steps > facets) throw Error("trace_map: walk on surface " + std::to_string(i) + " does not close");
    } while (vx != sx || vy != sy || dir != 0);
    if (steps != facets) {
      throw PreconditionError("trace_map: surface " + std::to_string(i) + " has more than one boundary loop");
    }
    traces[i] = std::move(trace);
  }

  // Faces of the crossing piece are the components of cells that agree on
  // every crossing curve.
  Label piece_bits = 0;
  for (const auto& [i, t] : traces) {
    if (!t.crossings.empty()) piece_bits |= surface_bit(i);
  }
  DisjointSets regions(g.cell_count());
  g.for_each_adjacency([&](std::uint32_t a, std::uint32_t b) {
    if (((g.label(a) ^ g.label(b)) & piece_bits) == 0) regions.unite(a, b);
  });

  MapBuilder builder;
  std::map<std::pair<std::int64_t, std::int64_t>, int> vertex_id;
  std::map<int, std::vector<std::pair<int, MapBuilder::HalfEdge>>> rings;  // by direction
  for (const auto& [i, t] : traces) {
    if (t.crossings.empty()) continue;
    std::vector<int> seq;
    for (const auto& v : t.crossings) {
      const auto key = std::make_pair(v.vx, v.vy);
      const auto [it, inserted] = vertex_id.emplace(key, static_cast<int>(vertex_id.size()));
      seq.push_back(it->second);
      rings[it->second].push_back({v.out_dir, {i, +1}});
      rings[it->second].push_back({(v.in_dir + 2) % 4, {i, -1}});
    }
    builder.curve(i, seq);
  }
  for (auto& [v, ring] : rings) {
    if (ring.size() != 4) throw Error("trace_map: vertex with " + std::to_string(ring.size()) + " half-edges");
    std::sort(ring.begin(), ring.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<MapBuilder::HalfEdge> ccw;
    for (const auto& [dir, h] : ring) ccw.push_back(h);
    builder.rotation(v, ccw);
  }

  // Region of each dart: the cell left of its first unit edge.
  struct DartRef {
    int curve, arc;
    bool backward;
  };
  std::map<std::uint32_t, DartRef> region_dart;
  for (const auto& [i, t] : traces) {
    const std::size_t len = t.crossings.size();
    for (std::size_t j = 0; j < len; ++j) {
      const auto& here = t.crossings[j];
      const auto& next = t.crossings[(j + 1) % len];
      region_dart.emplace(regions.find(static_cast<std::uint32_t>(here.left_out)), DartRef{i, static_cast<int>(j), false});
      const int back = (next.in_dir + 2) % 4;
      const std::size_t back_left = walk.left_cell(next.vx, next.vy, back);
      region_dart.emplace(regions.find(static_cast<std::uint32_t>(back_left)), DartRef{i, static_cast<int>(j), true});
    }
  }
  const bool has_piece = piece_bits != 0;
  if (has_piece) {
    const auto it = region_dart.find(regions.find(0));
    if (it == region_dart.end()) throw Error("trace_map: outer face has no boundary dart");
    builder.outer(it->second.curve, it->second.arc, it->second.backward);
  }
  // Free curves: hosts and nesting.
  std::vector<int> free_ids;
  for (const auto& [i, t] : traces) {
    if (t.crossings.empty()) free_ids.push_back(i);
  }
  for (int i : free_ids) builder.free_curve(i);
  CombinatorialMap map = builder.build();
  for (auto& f : map.free_curves) {
    const std::size_t outside = traces[f.curve].outside_cell;
    if (has_piece) {
      const auto it = region_dart.find(regions.find(static_cast<std::uint32_t>(outside)));
      if (it == region_dart.end()) throw Error("trace_map: free curve host face not found");
      f.host_dart = builder.dart(it->second.curve, it->second.arc, it->second.backward);
    }
    int best_depth = -1;
    for (int other : free_ids) {
      if (other == f.curve || (g.label(outside) & surface_bit(other)) != 0) continue;
      const std::size_t other_outside = traces[other].outside_cell;
      int depth = 0;
      for (int k : free_ids) depth += (g.label(other_outside) & surface_bit(k)) == 0 ? 1 : 0;
      if (depth > best_depth) {
        best_depth = depth;
        f.parent = other;
      }
    }
  }
  const auto check = validate_map(map);
  if (!check.ok()) throw Error("trace_map: traced map invalid: " + check.summary());
  return map;
}

}  // namespace venn
