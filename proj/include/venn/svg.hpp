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

// Deterministic SVG output for 2D diagrams. Grids are drawn by tracing cell
// boundaries; maps by a barycentric (Tutte) embedding of vertices, arc
// midpoints and face centers with the outer face pinned to a circle.

#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "venn/disjoint_sets.hpp"
#include "venn/grid.hpp"
#include "venn/map.hpp"

namespace venn {

struct SvgOptions {
  bool labels = false;
  double size = 800.0;  // pixels along the longer side
};

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

inline const char* palette(int curve) {
  static constexpr const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                           "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
  return colors[(curve - 1) % 10];
}

inline std::string svg_open(double w, double h) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) + "\" height=\"" + fmt(h) + "\" viewBox=\"0 0 " +
         fmt(w) + " " + fmt(h) + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

inline std::string text_at(double x, double y, const std::string& s) {
  return "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) +
         "\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\">" + s + "</text>\n";
}

}  // namespace detail

// Fixes every axis named in `fixed` (0-based axis -> index) and keeps the rest.
inline GridDiagram slice_grid(const GridDiagram& g, const std::map<int, std::size_t>& fixed) {
  std::vector<std::size_t> shape;
  std::vector<int> kept;
  for (int a = 0; a < g.dimension(); ++a) {
    const auto it = fixed.find(a);
    if (it == fixed.end()) {
      shape.push_back(g.shape()[static_cast<std::size_t>(a)]);
      kept.push_back(a);
    } else if (it->second >= g.shape()[static_cast<std::size_t>(a)]) {
      throw PreconditionError("slice: index " + std::to_string(it->second) + " outside axis " + std::to_string(a + 1));
    }
  }
  for (const auto& [a, v] : fixed) {
    if (a < 0 || a >= g.dimension()) throw PreconditionError("slice: no axis " + std::to_string(a + 1));
  }
  if (shape.empty()) throw PreconditionError("slice: every axis fixed");
  GridDiagram out(g.surfaces(), shape);
  std::size_t base = 0;
  for (const auto& [a, v] : fixed) base += v * g.strides()[static_cast<std::size_t>(a)];
  for (std::size_t c = 0; c < out.cell_count(); ++c) {
    std::size_t src = base;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      src += out.coordinate(c, static_cast<int>(k)) * g.strides()[static_cast<std::size_t>(kept[k])];
    }
    out.set_label(c, g.label(src));
  }
  return out;
}

inline std::string render_grid_svg(const GridDiagram& g, const SvgOptions& opt = {}) {
  if (g.dimension() != 2) throw PreconditionError("render: grid must be 2D (use a slice)");
  const std::size_t w = g.shape()[0], h = g.shape()[1];
  const double scale = opt.size / static_cast<double>(std::max(w, h));
  const double W = scale * static_cast<double>(w), H = scale * static_cast<double>(h);
  auto cell = [&](std::int64_t x, std::int64_t y) -> Label {
    if (x < 0 || y < 0 || x >= static_cast<std::int64_t>(w) || y >= static_cast<std::int64_t>(h)) return g.exterior();
    return g.label(static_cast<std::size_t>(x) * h + static_cast<std::size_t>(y));
  };
  static constexpr int dx[4] = {1, 0, -1, 0}, dy[4] = {0, 1, 0, -1};
  static constexpr int lx[4] = {0, -1, -1, 0}, ly[4] = {0, 0, -1, -1};
  static constexpr int rx[4] = {0, 0, -1, -1}, ry[4] = {-1, 0, 0, -1};
  auto oriented = [&](std::int64_t vx, std::int64_t vy, int d, Label bit) {
    return (cell(vx + lx[d], vy + ly[d]) & bit) == 0 && (cell(vx + rx[d], vy + ry[d]) & bit) != 0;
  };
  auto point = [&](std::int64_t vx, std::int64_t vy) {
    return detail::fmt(scale * static_cast<double>(vx)) + "," + detail::fmt(H - scale * static_cast<double>(vy));
  };
  std::string out = detail::svg_open(W, H);
  for (int i = 1; i <= g.surfaces(); ++i) {
    const Label bit = surface_bit(i);
    // Oriented boundary edges keyed by start vertex and direction.
    std::vector<char> used((w + 1) * (h + 1) * 4, 0);
    auto key = [&](std::int64_t vx, std::int64_t vy, int d) {
      return (static_cast<std::size_t>(vx) * (h + 1) + static_cast<std::size_t>(vy)) * 4 + static_cast<std::size_t>(d);
    };
    std::string path;
    for (std::int64_t vx = 0; vx <= static_cast<std::int64_t>(w); ++vx) {
      for (std::int64_t vy = 0; vy <= static_cast<std::int64_t>(h); ++vy) {
        for (int d = 0; d < 4; ++d) {
          if (used[key(vx, vy, d)] || !oriented(vx, vy, d, bit)) continue;
          path += "M" + point(vx, vy);
          std::int64_t x = vx, y = vy;
          int dir = d;
          while (!used[key(x, y, dir)]) {
            used[key(x, y, dir)] = 1;
            x += dx[dir];
            y += dy[dir];
            int next = -1;
            for (int turn : {1, 0, 3}) {
              if (oriented(x, y, (dir + turn) % 4, bit)) {
                next = (dir + turn) % 4;
                break;
              }
            }
            if (next < 0) break;
            if (next != dir) path += "L" + point(x, y);
            dir = next;
          }
          path += "Z";
        }
      }
    }
    if (path.empty()) continue;
    out += "<path id=\"S" + std::to_string(i) + "\" d=\"" + path + "\" fill=\"none\" stroke=\"" + detail::palette(i) +
           "\" stroke-width=\"2\"/>\n";
  }
  if (opt.labels) {
    DisjointSets sets(g.cell_count());
    g.for_each_adjacency([&](std::uint32_t a, std::uint32_t b) {
      if (g.label(a) == g.label(b)) sets.unite(a, b);
    });
    std::map<std::uint32_t, std::array<double, 3>> sums;  // root -> (sx, sy, count)
    for (std::uint32_t c = 0; c < g.cell_count(); ++c) {
      auto& s = sums[sets.find(c)];
      s[0] += static_cast<double>(c / h);
      s[1] += static_cast<double>(c % h);
      s[2] += 1;
    }
    std::map<std::uint32_t, std::pair<double, std::uint32_t>> nearest;
    for (std::uint32_t c = 0; c < g.cell_count(); ++c) {
      const std::uint32_t root = sets.find(c);
      const auto& s = sums[root];
      const double ddx = static_cast<double>(c / h) - s[0] / s[2], ddy = static_cast<double>(c % h) - s[1] / s[2];
      const double dist = ddx * ddx + ddy * ddy;
      auto it = nearest.find(root);
      if (it == nearest.end() || dist < it->second.first) nearest[root] = {dist, c};
    }
    for (const auto& [root, best] : nearest) {
      const std::uint32_t c = best.second;
      out += detail::text_at(scale * (static_cast<double>(c / h) + 0.5), H - scale * (static_cast<double>(c % h) + 0.5),
                             SignVector{g.label(c), g.surfaces()}.to_string());
    }
  }
  return out + "</svg>\n";
}

inline std::string render_map_svg(const CombinatorialMap& map, const SvgOptions& opt = {}) {
  const double S = opt.size;
  const double cx = S / 2, cy = S / 2, R = 0.42 * S;
  std::string out = detail::svg_open(S, S);
  auto px = [&](double x) { return detail::fmt(cx + R * x); };
  auto py = [&](double y) { return detail::fmt(cy - R * y); };
  const auto regions = faces_with_signs(map);
  std::vector<double> fx, fy;  // face centers
  std::vector<double> face_radius;
  if (map.dart_count() > 0) {
    const MapTopology topo = map_topology(map);
    const int V = topo.vertex_count, E = topo.edge_count, F = topo.face_count;
    // Nodes: vertices, then arc midpoints (per lower dart of each arc), then faces.
    std::vector<int> edge_of(static_cast<std::size_t>(map.dart_count()));
    {
      int e = 0;
      std::vector<int> seen(static_cast<std::size_t>(map.dart_count()), -1);
      for (int d = 0; d < map.dart_count(); ++d) {
        const int p = map.pair[static_cast<std::size_t>(d)];
        if (seen[static_cast<std::size_t>(p)] >= 0) {
          edge_of[static_cast<std::size_t>(d)] = seen[static_cast<std::size_t>(p)];
        } else {
          edge_of[static_cast<std::size_t>(d)] = seen[static_cast<std::size_t>(d)] = e++;
        }
      }
    }
    const int N = V + E + F;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(N));
    auto link = [&](int a, int b) {
      adj[static_cast<std::size_t>(a)].push_back(b);
      adj[static_cast<std::size_t>(b)].push_back(a);
    };
    for (int d = 0; d < map.dart_count(); ++d) {
      const int v = topo.vertex_of[static_cast<std::size_t>(d)];
      const int e = V + edge_of[static_cast<std::size_t>(d)];
      const int f = V + E + topo.face_of[static_cast<std::size_t>(d)];
      link(v, e);
      link(e, f);
      link(v, f);
    }
    std::vector<double> x(static_cast<std::size_t>(N), 0.0), y(static_cast<std::size_t>(N), 0.0);
    std::vector<char> pinned(static_cast<std::size_t>(N), 0);
    // Outer boundary walked with the outer face on the left, i.e. clockwise.
    std::vector<int> ring;
    int d = map.outer_dart;
    do {
      ring.push_back(topo.vertex_of[static_cast<std::size_t>(d)]);
      ring.push_back(V + edge_of[static_cast<std::size_t>(d)]);
      d = topo.next_in_face(map, d);
    } while (d != map.outer_dart);
    const int outer_face = V + E + topo.face_of[static_cast<std::size_t>(map.outer_dart)];
    pinned[static_cast<std::size_t>(outer_face)] = 1;
    for (std::size_t k = 0; k < ring.size(); ++k) {
      const double t = -2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(ring.size());
      const auto node = static_cast<std::size_t>(ring[k]);
      if (pinned[node]) continue;
      pinned[node] = 1;
      x[node] = std::cos(t);
      y[node] = std::sin(t);
    }
    for (int iter = 0; iter < 5000; ++iter) {
      double delta = 0;
      for (int v = 0; v < N; ++v) {
        const auto uv = static_cast<std::size_t>(v);
        if (pinned[uv]) continue;
        double sx = 0, sy = 0;
        int count = 0;
        for (int nb : adj[uv]) {
          if (nb == outer_face) continue;
          sx += x[static_cast<std::size_t>(nb)];
          sy += y[static_cast<std::size_t>(nb)];
          ++count;
        }
        if (count == 0) continue;
        const double nx = sx / count, ny = sy / count;
        delta = std::max(delta, std::abs(nx - x[uv]) + std::abs(ny - y[uv]));
        x[uv] = nx;
        y[uv] = ny;
      }
      if (delta < 1e-12) break;
    }
    for (int c : map.curves) {
      if (map.find_free(c)) continue;
      int start = -1;
      for (int k = 0; k < map.dart_count() && start < 0; ++k) {
        if (map.curve_of[static_cast<std::size_t>(k)] == c) start = k;
      }
      std::string path;
      int cur = start;
      do {
        const auto v = static_cast<std::size_t>(topo.vertex_of[static_cast<std::size_t>(cur)]);
        const auto e = static_cast<std::size_t>(V + edge_of[static_cast<std::size_t>(cur)]);
        path += (path.empty() ? "M" : "L") + px(x[v]) + "," + py(y[v]) + "L" + px(x[e]) + "," + py(y[e]);
        cur = topo.continuation[static_cast<std::size_t>(map.pair[static_cast<std::size_t>(cur)])];
      } while (cur != start && cur >= 0);
      out += "<path id=\"S" + std::to_string(c) + "\" d=\"" + path + "Z\" fill=\"none\" stroke=\"" + detail::palette(c) +
             "\" stroke-width=\"2\"/>\n";
    }
    for (int f = 0; f < F; ++f) {
      const auto node = static_cast<std::size_t>(V + E + f);
      if (V + E + f == outer_face) {
        fx.push_back(-0.95);
        fy.push_back(0.95);
      } else {
        fx.push_back(x[node]);
        fy.push_back(y[node]);
      }
    }
  } else {
    fx.push_back(-0.95);
    fy.push_back(0.95);
  }
  // Free curves: circles around their host face center, nested by parent.
  std::vector<std::pair<double, double>> free_label;
  const std::size_t piece_regions = fx.size();
  for (std::size_t k = 0; k < map.free_curves.size(); ++k) {
    const FreeCurve& f = map.free_curves[k];
    int depth = 0;
    for (int p = f.parent; p != 0; p = map.find_free(p)->parent) ++depth;
    double ccx = 0, ccy = 0;
    if (map.dart_count() > 0) {
      const auto face = static_cast<std::size_t>(map_topology(map).face_of[static_cast<std::size_t>(f.host_dart)]);
      ccx = fx[face];
      ccy = fy[face];
    }
    const double r = (map.dart_count() > 0 ? 0.12 : 0.8) / (1.0 + depth);
    out += "<circle id=\"S" + std::to_string(f.curve) + "\" cx=\"" + px(ccx) + "\" cy=\"" + py(ccy) + "\" r=\"" +
           detail::fmt(R * r) + "\" fill=\"none\" stroke=\"" + detail::palette(f.curve) + "\" stroke-width=\"2\"/>\n";
    free_label.push_back({ccx, ccy - r * 0.5});
  }
  if (opt.labels) {
    for (std::size_t k = 0; k < regions.size(); ++k) {
      const double lx = k < piece_regions ? fx[k] : free_label[k - piece_regions].first;
      const double ly = k < piece_regions ? fy[k] : free_label[k - piece_regions].second;
      out += detail::text_at(cx + R * lx, cy - R * ly, regions[k].sign.to_string());
    }
  }
  return out + "</svg>\n";
}

}  // namespace venn
