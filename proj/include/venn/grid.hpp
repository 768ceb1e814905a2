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

// Discrete diagrams on m-dimensional cell arrays. Surfaces are implicit: the
// surface S_i is the set of facets between cells whose labels differ in bit i.

#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "venn/common.hpp"
#include "venn/complex.hpp"

namespace venn {

// Upper bound on cells per grid; VENN_MAX_CELLS overrides.
inline std::size_t max_grid_cells() {
  if (const char* env = std::getenv("VENN_MAX_CELLS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{1} << 26;
}

class GridDiagram {
 public:
  GridDiagram() = default;

  // All cells start all-exterior.
  GridDiagram(int surfaces, std::vector<std::size_t> shape) : surfaces_(surfaces), shape_(std::move(shape)) {
    if (surfaces_ < 0 || surfaces_ > kMaxSurfaces) throw PreconditionError("surface count out of range");
    if (shape_.empty()) throw PreconditionError("grid needs at least one axis");
    std::size_t cells = 1;
    for (std::size_t d : shape_) {
      if (d == 0) throw PreconditionError("grid axis of length 0");
      if (cells > max_grid_cells() / d) throw BudgetError("grid exceeds VENN_MAX_CELLS (" + std::to_string(max_grid_cells()) + ")");
      cells *= d;
    }
    strides_.assign(shape_.size(), 1);
    for (std::size_t a = shape_.size() - 1; a > 0; --a) strides_[a - 1] = strides_[a] * shape_[a];
    labels_.assign(cells, low_bits(surfaces_));
  }

  int dimension() const { return static_cast<int>(shape_.size()); }
  int surfaces() const { return surfaces_; }
  Label exterior() const { return low_bits(surfaces_); }
  const std::vector<std::size_t>& shape() const { return shape_; }
  const std::vector<std::size_t>& strides() const { return strides_; }
  std::size_t cell_count() const { return labels_.size(); }

  Label label(std::size_t cell) const { return labels_[cell]; }
  void set_label(std::size_t cell, Label l) { labels_[cell] = l; }
  const std::vector<Label>& labels() const { return labels_; }
  std::vector<Label>& labels() { return labels_; }

  std::size_t coordinate(std::size_t cell, int axis) const {
    return (cell / strides_[static_cast<std::size_t>(axis)]) % shape_[static_cast<std::size_t>(axis)];
  }

  std::vector<std::size_t> coordinates(std::size_t cell) const {
    std::vector<std::size_t> c(shape_.size());
    for (std::size_t a = 0; a < shape_.size(); ++a) c[a] = coordinate(cell, static_cast<int>(a));
    return c;
  }

  std::size_t index(const std::vector<std::size_t>& coords) const {
    std::size_t i = 0;
    for (std::size_t a = 0; a < shape_.size(); ++a) i += coords[a] * strides_[a];
    return i;
  }

  bool on_border(std::size_t cell) const {
    for (int a = 0; a < dimension(); ++a) {
      const std::size_t x = coordinate(cell, a);
      if (x == 0 || x + 1 == shape_[static_cast<std::size_t>(a)]) return true;
    }
    return false;
  }

  // True when the block cell + {0,1}^axes lies inside the array.
  bool block_fits(std::size_t cell, unsigned axes) const {
    for (unsigned m = axes; m != 0; m &= m - 1) {
      const int a = std::countr_zero(m);
      if (coordinate(cell, a) + 1 >= shape_[static_cast<std::size_t>(a)]) return false;
    }
    return true;
  }

  std::size_t offset(unsigned axes) const {
    std::size_t o = 0;
    for (unsigned m = axes; m != 0; m &= m - 1) o += strides_[static_cast<std::size_t>(std::countr_zero(m))];
    return o;
  }

  // Face-adjacent pairs (a < b).
  template <class F>
  void for_each_adjacency(F&& f) const {
    const std::size_t n = labels_.size();
    for (std::size_t a = 0; a < shape_.size(); ++a) {
      const std::size_t s = strides_[a];
      const std::size_t len = shape_[a];
      for (std::size_t c = 0; c < n; ++c) {
        if ((c / s) % len + 1 < len) f(static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c + s));
      }
    }
  }

  bool operator==(const GridDiagram&) const = default;

 private:
  int surfaces_ = 0;
  std::vector<std::size_t> shape_;
  std::vector<std::size_t> strides_;
  std::vector<Label> labels_;
};

namespace detail {

inline std::string cell_text(const GridDiagram& g, std::size_t cell) {
  std::string s = "(";
  const auto c = g.coordinates(cell);
  for (std::size_t a = 0; a < c.size(); ++a) s += (a ? "," : "") + std::to_string(c[a]);
  return s + ")";
}

inline std::string axes_text(unsigned axes) {
  std::string s = "{";
  bool first = true;
  for (unsigned m = axes; m != 0; m &= m - 1) {
    s += (first ? "" : ",") + std::to_string(std::countr_zero(m));
    first = false;
  }
  return s + "}";
}

inline Label block_variation(const GridDiagram& g, std::size_t cell, unsigned axes) {
  const Label base = g.label(cell);
  Label diff = 0;
  for (unsigned sub = axes;; sub = (sub - 1) & axes) {
    diff |= g.label(cell + g.offset(sub)) ^ base;
    if (sub == 0) break;
  }
  return diff;
}

}  // namespace detail

// Border cells all-exterior; around every codimension-k face at most k bits
// vary; in every 2x2 block two varying bits show all four combinations and
// a single varying bit never forms a checkerboard.
inline ValidationReport validate_grid(const GridDiagram& g) {
  ValidationReport report;
  const int m = g.dimension();
  if (m < 1) {
    report.fail("shape", "grid has no axes");
    return report;
  }
  const Label valid = g.exterior();
  for (std::size_t c = 0; c < g.cell_count(); ++c) {
    if ((g.label(c) & ~valid) != 0) {
      report.fail("labels", "cell " + detail::cell_text(g, c) + " has bits beyond surface count");
      return report;
    }
  }
  for (std::size_t c = 0; c < g.cell_count(); ++c) {
    if (g.on_border(c) && g.label(c) != valid) {
      report.fail("border", "cell " + detail::cell_text(g, c) + " is interior to " +
                                SurfaceSet(~g.label(c) & valid).to_string());
      break;
    }
  }
  const unsigned all_axes = (1u << m) - 1;
  for (std::size_t c = 0; c < g.cell_count(); ++c) {
    for (unsigned axes = 1; axes <= all_axes; ++axes) {
      if (!g.block_fits(c, axes)) continue;
      const int k = std::popcount(axes);
      const Label diff = detail::block_variation(g, c, axes);
      if (std::popcount(diff) > k) {
        report.fail("clean", "block at " + detail::cell_text(g, c) + " axes " + detail::axes_text(axes) + " varies in " +
                                 SurfaceSet(diff).to_string());
        return report;
      }
      if (k != 2 || diff == 0) continue;
      const Label l00 = g.label(c);
      const Label l11 = g.label(c + g.offset(axes));
      const unsigned a = 1u << std::countr_zero(axes);
      const Label l10 = g.label(c + g.offset(a));
      const Label l01 = g.label(c + g.offset(axes & ~a));
      if (std::popcount(diff) == 1 && l00 == l11 && l10 == l01) {
        report.fail("clean", "checkerboard of surface " + SurfaceSet(diff).to_string() + " at " + detail::cell_text(g, c) +
                                 " axes " + detail::axes_text(axes));
        return report;
      }
      if (std::popcount(diff) == 2 && (l00 == l11 || l10 == l01)) {
        report.fail("transversal", "surfaces " + SurfaceSet(diff).to_string() + " touch without crossing at " +
                                       detail::cell_text(g, c) + " axes " + detail::axes_text(axes));
        return report;
      }
    }
  }
  return report;
}

// Keeps only the bits in `subset`, renumbered 1..|subset| in order.
inline GridDiagram restrict(const GridDiagram& g, SurfaceSet subset) {
  if (!subset.subset_of(SurfaceSet::all(g.surfaces()))) throw PreconditionError("restrict: subset outside 1..n");
  GridDiagram out(subset.size(), g.shape());
  const Label mask = subset.bits();
  for (std::size_t c = 0; c < g.cell_count(); ++c) out.set_label(c, compact_bits(g.label(c), mask));
  return out;
}

// Doubles every axis by replication.
inline GridDiagram refine(const GridDiagram& g) {
  std::vector<std::size_t> shape = g.shape();
  for (auto& d : shape) d *= 2;
  GridDiagram out(g.surfaces(), shape);
  const int m = g.dimension();
  for (std::size_t c = 0; c < out.cell_count(); ++c) {
    std::size_t src = 0;
    for (int a = 0; a < m; ++a) src += (out.coordinate(c, a) / 2) * g.strides()[static_cast<std::size_t>(a)];
    out.set_label(c, g.label(src));
  }
  return out;
}

// Order in which surfaces enter and leave the stack of layers. Surface i
// occupies layers [1 + rank of i in `start`, n + rank of i in `end`], ranks
// 1-based. Both orders empty means the index order, i.e. layers [i+1, n+i].
struct LiftOrder {
  std::vector<int> start;
  std::vector<int> end;

  static LiftOrder identity(int n) {
    LiftOrder o;
    for (int i = 1; i <= n; ++i) o.start.push_back(i);
    o.end = o.start;
    return o;
  }
  bool operator==(const LiftOrder&) const = default;
};

namespace detail {

inline std::vector<int> order_ranks(const std::vector<int>& order, int n, const char* what) {
  if (order.size() != static_cast<std::size_t>(n)) throw PreconditionError(std::string("lift order: ") + what + " has wrong length");
  std::vector<int> rank(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int i = order[k];
    if (i < 1 || i > n || rank[static_cast<std::size_t>(i)] != 0) {
      throw PreconditionError(std::string("lift order: ") + what + " is not a permutation of 1..n");
    }
    rank[static_cast<std::size_t>(i)] = static_cast<int>(k) + 1;
  }
  return rank;
}

}  // namespace detail

// Surfaces active on each of the 2n+2 layers.
inline std::vector<Label> lift_layer_masks(int n, const LiftOrder& order) {
  const LiftOrder o = order.start.empty() && order.end.empty() ? LiftOrder::identity(n) : order;
  const auto rs = detail::order_ranks(o.start, n, "start");
  const auto re = detail::order_ranks(o.end, n, "end");
  std::vector<Label> mask(static_cast<std::size_t>(2 * n + 2), 0);
  for (int i = 1; i <= n; ++i) {
    for (int t = 1 + rs[static_cast<std::size_t>(i)]; t <= n + re[static_cast<std::size_t>(i)]; ++t) {
      mask[static_cast<std::size_t>(t)] |= surface_bit(i);
    }
  }
  return mask;
}

// One lift without validation: a new last axis of length 2n+2, surface i
// filled above its base interior on the layers given by `order`.
inline GridDiagram lift_prism_raw(const GridDiagram& g, const LiftOrder& order = {}) {
  const int n = g.surfaces();
  const auto layer_mask = lift_layer_masks(n, order);
  std::vector<std::size_t> shape = g.shape();
  const std::size_t depth = layer_mask.size();
  shape.push_back(depth);
  GridDiagram out(n, shape);
  auto& labels = out.labels();
  for (std::size_t c = 0; c < g.cell_count(); ++c) {
    const Label interior = ~g.label(c) & g.exterior();
    for (std::size_t t = 0; t < depth; ++t) {
      labels[c * depth + t] = g.exterior() & ~(interior & layer_mask[t]);
    }
  }
  return out;
}

// Prism lift; an unclean result triggers refinement of the input, at most
// twice.
inline GridDiagram lift_prism(const GridDiagram& g, const LiftOrder& order = {}) {
  const auto input = validate_grid(g);
  if (!input.ok()) throw PreconditionError("lift_prism: input grid invalid: " + input.summary());
  GridDiagram base = g;
  for (int attempt = 0;; ++attempt) {
    GridDiagram lifted = lift_prism_raw(base, order);
    const auto report = validate_grid(lifted);
    if (report.ok()) return lifted;
    if (attempt == 2) throw Error("lift_prism: lifted grid not clean after 2 refinements: " + report.summary());
    base = refine(base);
  }
}

}  // namespace venn
