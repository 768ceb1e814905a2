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

// Lower-dimensional structure of grid diagrams: intersection loci, edge
// components of a surface, and the complex induced on one surface.
//
// A grid face is identified by its lowest surrounding cell and the set of
// axes it is orthogonal to: face (c, A) is the face shared by the block of
// cells c + {0,1}^A. Its id is c << m | A.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "venn/complex.hpp"
#include "venn/disjoint_sets.hpp"
#include "venn/grid.hpp"

namespace venn {

using FaceId = std::uint64_t;

struct GridFace {
  std::size_t cell = 0;
  unsigned axes = 0;

  FaceId id(int m) const { return (static_cast<FaceId>(cell) << m) | axes; }
};

// A complex whose cells are grid faces.
struct FaceComplex {
  std::vector<GridFace> faces;
  LabeledComplex complex;
};

namespace detail {

// Pairs of faces sharing a codimension-(k+1) boundary face.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> shared_boundary_edges(
    const GridDiagram& g, const std::vector<GridFace>& faces) {
  const int m = g.dimension();
  std::vector<std::pair<FaceId, std::uint32_t>> incident;
  for (std::uint32_t f = 0; f < faces.size(); ++f) {
    const GridFace& face = faces[f];
    for (int b = 0; b < m; ++b) {
      const unsigned bit = 1u << b;
      if (face.axes & bit) continue;
      const unsigned axes = face.axes | bit;
      incident.emplace_back(GridFace{face.cell, axes}.id(m), f);
      if (g.coordinate(face.cell, b) > 0) {
        incident.emplace_back(GridFace{face.cell - g.strides()[static_cast<std::size_t>(b)], axes}.id(m), f);
      }
    }
  }
  std::sort(incident.begin(), incident.end());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::size_t lo = 0; lo < incident.size();) {
    std::size_t hi = lo;
    while (hi < incident.size() && incident[hi].first == incident[lo].first) ++hi;
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = i + 1; j < hi; ++j) edges.emplace_back(incident[i].second, incident[j].second);
    }
    lo = hi;
  }
  return edges;
}

// Number of distinct values of (label & mask) over the block.
inline std::size_t block_combinations(const GridDiagram& g, std::size_t cell, unsigned axes, Label mask) {
  std::vector<Label> seen;
  for (unsigned sub = axes;; sub = (sub - 1) & axes) {
    const Label l = g.label(cell + g.offset(sub)) & mask;
    if (std::find(seen.begin(), seen.end(), l) == seen.end()) seen.push_back(l);
    if (sub == 0) break;
  }
  return seen.size();
}

}  // namespace detail

// Codimension-k faces around which all 2^k sign combinations of `surfaces`
// occur, adjacent when they share a codimension-(k+1) face. Labels are the
// remaining bits, compacted. Empty when k exceeds the dimension.
inline FaceComplex intersection_locus(const GridDiagram& g, SurfaceSet surfaces) {
  const int m = g.dimension();
  const int k = surfaces.size();
  if (k < 1) throw PreconditionError("intersection_locus: need at least one surface");
  if (!surfaces.subset_of(SurfaceSet::all(g.surfaces()))) throw PreconditionError("intersection_locus: unknown surface");
  const Label others = g.exterior() & ~surfaces.bits();
  FaceComplex out;
  if (k > m) {
    out.complex = LabeledComplex(g.surfaces() - k, {}, {});
    return out;
  }
  const Label mask = surfaces.bits();
  const std::size_t want = std::size_t{1} << k;
  std::vector<Label> labels;
  for (std::size_t c = 0; c < g.cell_count(); ++c) {
    for (unsigned axes = 1; axes < (1u << m); ++axes) {
      if (std::popcount(axes) != k || !g.block_fits(c, axes)) continue;
      if ((detail::block_variation(g, c, axes) & mask) != mask) continue;
      if (detail::block_combinations(g, c, axes, mask) != want) continue;
      out.faces.push_back({c, axes});
      labels.push_back(compact_bits(g.label(c), others));
    }
  }
  auto edges = detail::shared_boundary_edges(g, out.faces);
  out.complex = LabeledComplex(g.surfaces() - k, std::move(labels), std::move(edges));
  return out;
}

// Components of each surface's facets after cutting along its crossings with
// every other surface. Index i-1 holds e_V(S_i); a surface without facets
// counts 0, one without crossings 1.
inline std::vector<std::size_t> surface_edge_counts(const GridDiagram& g) {
  const int m = g.dimension();
  const auto facet_id = [m](std::size_t cell, int axis) {
    return static_cast<std::uint32_t>(cell * static_cast<std::size_t>(m) + static_cast<std::size_t>(axis));
  };
  if (g.cell_count() * static_cast<std::size_t>(m) > 0xFFFFFFFFu) throw BudgetError("too many facets");
  DisjointSets facets(g.cell_count() * static_cast<std::size_t>(m));
  for (std::size_t c = 0; c < g.cell_count(); ++c) {
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        const unsigned axes = (1u << a) | (1u << b);
        if (!g.block_fits(c, axes)) continue;
        const std::size_t sa = g.strides()[static_cast<std::size_t>(a)];
        const std::size_t sb = g.strides()[static_cast<std::size_t>(b)];
        const Label l00 = g.label(c), l10 = g.label(c + sa), l01 = g.label(c + sb), l11 = g.label(c + sa + sb);
        const Label vary = (l00 ^ l10) | (l01 ^ l11) | (l00 ^ l01) | (l10 ^ l11);
        if (vary == 0) continue;
        // The four facets around this codimension-2 face and their cell pairs.
        const std::uint32_t ids[4] = {facet_id(c, a), facet_id(c + sb, a), facet_id(c, b), facet_id(c + sa, b)};
        const Label flips[4] = {l00 ^ l10, l01 ^ l11, l00 ^ l01, l10 ^ l11};
        for (Label rest = vary; rest != 0; rest &= rest - 1) {
          const Label bit = rest & (~rest + 1);
          bool cut = false;
          for (Label others = vary & ~bit; others != 0 && !cut; others &= others - 1) {
            const Label pair_mask = bit | (others & (~others + 1));
            Label seen = 0;  // bitset over the 4 combinations
            for (Label l : {l00, l10, l01, l11}) {
              const Label v = l & pair_mask;
              seen |= 1u << ((v & bit ? 1 : 0) | (v & ~bit ? 2 : 0));
            }
            cut = seen == 0xF;
          }
          if (cut) continue;
          std::int64_t first = -1;
          for (int f = 0; f < 4; ++f) {
            if ((flips[f] & bit) == 0) continue;
            if (first < 0) {
              first = ids[f];
            } else {
              facets.unite(static_cast<std::uint32_t>(first), ids[f]);
            }
          }
        }
      }
    }
  }
  std::vector<std::size_t> counts(static_cast<std::size_t>(g.surfaces()), 0);
  for (std::size_t c = 0; c < g.cell_count(); ++c) {
    for (int a = 0; a < m; ++a) {
      const std::size_t s = g.strides()[static_cast<std::size_t>(a)];
      if (g.coordinate(c, a) + 1 >= g.shape()[static_cast<std::size_t>(a)]) continue;
      const Label flip = g.label(c) ^ g.label(c + s);
      if (flip == 0 || !facets.is_root(facet_id(c, a))) continue;
      for (Label rest = flip; rest != 0; rest &= rest - 1) ++counts[static_cast<std::size_t>(std::countr_zero(rest))];
    }
  }
  return counts;
}

inline std::size_t edge_components(const GridDiagram& g, int surface) {
  if (surface < 1 || surface > g.surfaces()) throw PreconditionError("edge_components: unknown surface");
  return surface_edge_counts(g)[static_cast<std::size_t>(surface - 1)];
}

// Facets of surface i as a complex labeled by the other n-1 bits, adjacent
// through shared codimension-2 faces.
inline FaceComplex project_onto_surface(const GridDiagram& g, int surface) {
  if (surface < 1 || surface > g.surfaces()) throw PreconditionError("project_onto_surface: unknown surface");
  const int m = g.dimension();
  const Label bit = surface_bit(surface);
  const Label others = g.exterior() & ~bit;
  FaceComplex out;
  std::vector<Label> labels;
  for (std::size_t c = 0; c < g.cell_count(); ++c) {
    for (int a = 0; a < m; ++a) {
      if (g.coordinate(c, a) + 1 >= g.shape()[static_cast<std::size_t>(a)]) continue;
      if (((g.label(c) ^ g.label(c + g.strides()[static_cast<std::size_t>(a)])) & bit) == 0) continue;
      out.faces.push_back({c, 1u << a});
      labels.push_back(compact_bits(g.label(c), others));
    }
  }
  auto edges = detail::shared_boundary_edges(g, out.faces);
  out.complex = LabeledComplex(g.surfaces() - 1, std::move(labels), std::move(edges));
  return out;
}

}  // namespace venn
