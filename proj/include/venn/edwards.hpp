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

// Edwards-style n-Venn diagrams as 2D grids.
//
// c1 and c2 are overlapping rectangles meeting at (0,0) and (-9,-9); c3 is
// the square |x|,|y| < 3; c_k for k >= 4 is a cogwheel around c3 whose teeth
// alternate between 3 + A_k and 3 - A_k. All boundaries are axis-parallel,
// so every crossing of the rasterized curves falls on a grid vertex.
//
// Teeth are positioned by a perimeter coordinate u in [0, 8) that runs
// counterclockwise around the square: u = 2s on the axis crossing of side s
// (right, top, left, bottom), u = 2s + 1.99 at the following corner. Tooth
// flanks of c_k sit at odd multiples of 2^(4-k), away from the axes and from
// every flank of the other wheels.

#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "venn/grid.hpp"

namespace venn {

struct EdwardsParams {
  int n = 3;
  double r0 = 3.0;
  double half_width = 12.0;  // box [-half_width, half_width]^2
  std::size_t resolution = 1024;
  double corner = 1.99;  // u offset of each square corner within its side

  double amplitude(int k) const { return r0 / std::ldexp(1.0, k - 2); }
};

namespace detail {

inline double perimeter_coordinate(const EdwardsParams& p, double x, double y) {
  int side;
  double t;
  if (std::abs(x) >= std::abs(y)) {
    side = x >= 0 ? 0 : 2;
    t = x >= 0 ? y : -y;
  } else {
    side = y > 0 ? 1 : 3;
    t = y > 0 ? -x : x;
  }
  const double tau = std::clamp(t / p.r0, -1.0, 1.0);
  const double along = tau <= 0 ? tau * (2.0 - p.corner) : tau * p.corner;
  return 2.0 * side + along;
}

inline int tooth_sign(int k, double u) {
  const double h = std::ldexp(1.0, 4 - k);
  const auto period = static_cast<long long>(std::floor((u + h) / (2.0 * h)));
  return period % 2 == 0 ? 1 : -1;
}

}  // namespace detail

inline bool edwards_interior(const EdwardsParams& p, int k, double x, double y) {
  if (k < 1) throw PreconditionError("edwards_interior: curve id must be >= 1");
  switch (k) {
    case 1:
      return x > -10.0 && x < 0.0 && y > -9.0 && y < 9.0;
    case 2:
      return x > -9.0 && x < 9.0 && y > -10.0 && y < 0.0;
    default:
      break;
  }
  const double rho = std::max(std::abs(x), std::abs(y));
  if (k == 3) return rho < p.r0;
  const double u = detail::perimeter_coordinate(p, x, y);
  return rho < p.r0 + p.amplitude(k) * detail::tooth_sign(k, u);
}

inline bool edwards_interior(int k, double x, double y) { return edwards_interior(EdwardsParams{}, k, x, y); }

// Samples every predicate at cell centers; no validation.
inline GridDiagram rasterize_edwards(const EdwardsParams& p) {
  GridDiagram g(p.n, {p.resolution, p.resolution});
  const double step = 2.0 * p.half_width / static_cast<double>(p.resolution);
  for (std::size_t ix = 0; ix < p.resolution; ++ix) {
    const double x = -p.half_width + (static_cast<double>(ix) + 0.5) * step;
    for (std::size_t iy = 0; iy < p.resolution; ++iy) {
      const double y = -p.half_width + (static_cast<double>(iy) + 0.5) * step;
      Label l = g.exterior();
      for (int k = 1; k <= p.n; ++k) {
        if (edwards_interior(p, k, x, y)) l &= ~surface_bit(k);
      }
      g.set_label(ix * p.resolution + iy, l);
    }
  }
  return g;
}

// Rasterizes and validates, doubling the resolution at most twice.
inline GridDiagram edwards_grid(EdwardsParams p) {
  if (p.n < 1 || p.n > kMaxSurfaces) throw PreconditionError("edwards_grid: n out of range");
  if (p.r0 + p.amplitude(4) >= 9.0 || p.r0 + p.amplitude(4) >= p.half_width - 3.0) {
    throw PreconditionError("edwards_grid: cogwheels must stay inside the rectangles");
  }
  ValidationReport report;
  for (int attempt = 0; attempt <= 2; ++attempt) {
    GridDiagram g = rasterize_edwards(p);
    report = validate_grid(g);
    if (report.ok()) return g;
    p.resolution *= 2;
  }
  throw Error("edwards_grid: not clean after 2 refinements: " + report.summary());
}

inline GridDiagram edwards_grid(int n, std::size_t resolution = 1024) {
  EdwardsParams p;
  p.n = n;
  p.resolution = resolution;
  return edwards_grid(p);
}

}  // namespace venn
