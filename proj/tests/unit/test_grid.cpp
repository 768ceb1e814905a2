#include <gtest/gtest.h>

#include <cstdlib>
#include <map>
#include <queue>
#include <random>
#include <vector>

#include "venn/analysis.hpp"
#include "venn/edwards.hpp"
#include "venn/grid.hpp"
#include "venn/grid_faces.hpp"

using namespace venn;

namespace {

// Independent flood fill: components of equal-label cells under
// face-adjacency, computed straight from coordinates.
std::map<Label, std::size_t> flood_components(const GridDiagram& g, Label mask) {
  const int m = g.dimension();
  std::vector<char> seen(g.cell_count(), 0);
  std::map<Label, std::size_t> out;
  for (std::size_t s = 0; s < g.cell_count(); ++s) {
    if (seen[s]) continue;
    const Label want = g.label(s) & mask;
    ++out[want];
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      const std::size_t c = q.front();
      q.pop();
      auto coords = g.coordinates(c);
      for (int a = 0; a < m; ++a) {
        for (int step : {-1, 1}) {
          auto nb = coords;
          const long long v = static_cast<long long>(nb[static_cast<std::size_t>(a)]) + step;
          if (v < 0 || v >= static_cast<long long>(g.shape()[static_cast<std::size_t>(a)])) continue;
          nb[static_cast<std::size_t>(a)] = static_cast<std::size_t>(v);
          const std::size_t d = g.index(nb);
          if (!seen[d] && (g.label(d) & mask) == want) {
            seen[d] = 1;
            q.push(d);
          }
        }
      }
    }
  }
  return out;
}

GridDiagram square_in_grid(std::size_t size, std::size_t lo, std::size_t hi) {
  GridDiagram g(1, {size, size});
  for (std::size_t x = lo; x < hi; ++x) {
    for (std::size_t y = lo; y < hi; ++y) g.set_label(g.index({x, y}), 0);
  }
  return g;
}

}  // namespace

TEST(Grid, StartsAllExteriorWithLastAxisFastest) {
  GridDiagram g(3, {4, 5, 6});
  EXPECT_EQ(g.cell_count(), 120u);
  EXPECT_EQ(g.dimension(), 3);
  for (std::size_t c = 0; c < g.cell_count(); ++c) EXPECT_EQ(g.label(c), 0b111u);
  EXPECT_EQ(g.index({0, 0, 1}), 1u);
  EXPECT_EQ(g.index({0, 1, 0}), 6u);
  EXPECT_EQ(g.index({1, 0, 0}), 30u);
  EXPECT_EQ(g.coordinates(g.index({2, 3, 4})), (std::vector<std::size_t>{2, 3, 4}));
  EXPECT_TRUE(g.on_border(g.index({0, 2, 2})));
  EXPECT_FALSE(g.on_border(g.index({1, 2, 2})));
  EXPECT_THROW(GridDiagram(1, {}), PreconditionError);
  EXPECT_THROW(GridDiagram(1, {3, 0}), PreconditionError);
}

TEST(Grid, CellBudgetFromEnvironment) {
  ::setenv("VENN_MAX_CELLS", "100", 1);
  EXPECT_EQ(max_grid_cells(), 100u);
  EXPECT_THROW(GridDiagram(1, {11, 10}), BudgetError);
  EXPECT_NO_THROW(GridDiagram(1, {10, 10}));
  ::unsetenv("VENN_MAX_CELLS");
  EXPECT_EQ(max_grid_cells(), std::size_t{1} << 26);
}

TEST(GridValidation, AcceptsSquareAndRejectsBorder) {
  EXPECT_TRUE(validate_grid(square_in_grid(6, 2, 4)).ok());
  GridDiagram g = square_in_grid(6, 2, 4);
  g.set_label(g.index({0, 3}), 0);
  const auto r = validate_grid(g);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(r.failed("border"));
}

TEST(GridValidation, RejectsTwoBitStep) {
  GridDiagram g(2, {6, 6});
  g.set_label(g.index({2, 2}), 0b00);
  const auto r = validate_grid(g);
  EXPECT_FALSE(r.ok());
}

TEST(GridValidation, RejectsCheckerboard) {
  GridDiagram g(1, {6, 6});
  g.set_label(g.index({2, 2}), 0);
  g.set_label(g.index({3, 3}), 0);
  EXPECT_FALSE(validate_grid(g).ok());
}

TEST(GridValidation, RejectsOutOfRangeLabel) {
  GridDiagram g(1, {5, 5});
  g.set_label(g.index({2, 2}), 0b10);
  EXPECT_FALSE(validate_grid(g).ok());
}

TEST(RegionCensus, MatchesFloodFillOnRandomGrids) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 2 + trial % 2;
    std::vector<std::size_t> shape(static_cast<std::size_t>(m), m == 2 ? 17 : 7);
    GridDiagram g(3, shape);
    std::uniform_int_distribution<Label> lab(0, 7);
    for (std::size_t c = 0; c < g.cell_count(); ++c) g.set_label(c, lab(rng));
    for (Label mask : {Label{7}, Label{5}, Label{2}}) {
      const Census census = region_census(g, SurfaceSet(mask));
      EXPECT_EQ(census.components, flood_components(g, mask)) << "trial " << trial << " mask " << mask;
    }
  }
}

TEST(Edwards, InteriorPredicate) {
  EXPECT_TRUE(edwards_interior(3, 0, 0));
  EXPECT_TRUE(edwards_interior(1, -5, 0));
  EXPECT_FALSE(edwards_interior(2, -5, 0));  // on the boundary y = 0
  EXPECT_FALSE(edwards_interior(2, -5, 1));
  EXPECT_TRUE(edwards_interior(1, -5, 1));
  EXPECT_TRUE(edwards_interior(4, 3.5, 0.1));
  EXPECT_FALSE(edwards_interior(3, 3.5, 0.1));
  EXPECT_FALSE(edwards_interior(4, 11, 11));
}

TEST(Edwards, AmplitudesHalve) {
  EdwardsParams p;
  EXPECT_DOUBLE_EQ(p.amplitude(4), 0.75);
  for (int k = 4; k < 10; ++k) EXPECT_DOUBLE_EQ(p.amplitude(k + 1) * 2, p.amplitude(k));
}

TEST(Edwards, SmallGridsAreSimpleVenn) {
  const std::size_t expected_edges[] = {0, 1, 4, 12, 28};
  for (int n = 1; n <= 4; ++n) {
    const GridDiagram g = edwards_grid(n, 256);
    ASSERT_TRUE(validate_grid(g).ok()) << n;
    Analyzer a(g);
    EXPECT_TRUE(a.is_venn()) << n;
    EXPECT_TRUE(a.is_simple()) << n;
    EXPECT_EQ(a.total_edges(), expected_edges[n]) << n;
  }
}

TEST(Restrict, RenumbersSurfaces) {
  const GridDiagram g = edwards_grid(4, 128);
  const GridDiagram r = restrict(g, SurfaceSet::of({2, 4}));
  EXPECT_EQ(r.surfaces(), 2);
  Analyzer full(g);
  Analyzer sub(r);
  EXPECT_EQ(sub.census().region_count(), full.census(SurfaceSet::of({2, 4})).region_count());
  EXPECT_TRUE(sub.is_venn());
  EXPECT_FALSE(Analyzer(restrict(g, SurfaceSet::of({3, 4}))).is_venn());
}

TEST(Refine, LeavesCensusAndEdgesInvariant) {
  const GridDiagram g = edwards_grid(4, 128);
  const GridDiagram r = refine(g);
  EXPECT_EQ(r.shape()[0], 256u);
  EXPECT_TRUE(validate_grid(r).ok());
  Analyzer a(g), b(r);
  EXPECT_EQ(a.census().components, b.census().components);
  EXPECT_EQ(a.edges(), b.edges());
}

TEST(IntersectionLocus, CrossingsOfEdwardsFour) {
  const GridDiagram g = edwards_grid(4, 256);
  std::size_t total = 0;
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      const FaceComplex f = intersection_locus(g, SurfaceSet::of({i, j}));
      total += region_census(f.complex, SurfaceSet::all(f.complex.label_bits())).region_count();
    }
  }
  EXPECT_EQ(total, 14u);  // 2^n - 2
  const FaceComplex f12 = intersection_locus(g, SurfaceSet::of({1, 2}));
  EXPECT_EQ(f12.faces.size(), 2u);
  EXPECT_TRUE(intersection_locus(g, SurfaceSet::of({1, 2, 3})).faces.empty());
}

TEST(IntersectionLocus, SingleSurfaceIsItsFacets) {
  const GridDiagram g = square_in_grid(6, 2, 4);
  const FaceComplex f = intersection_locus(g, SurfaceSet::of({1}));
  EXPECT_EQ(f.faces.size(), 8u);  // perimeter of a 2x2 block
  EXPECT_EQ(region_census(f.complex, SurfaceSet{}).region_count(), 1u);
}

TEST(EdgeCounts, SquareHasOneEdge) {
  EXPECT_EQ(surface_edge_counts(square_in_grid(6, 2, 4)), (std::vector<std::size_t>{1}));
  EXPECT_EQ(surface_edge_counts(GridDiagram(1, {4, 4})), (std::vector<std::size_t>{0}));
}

TEST(Projection, OntoSurfacesOfEdwards) {
  const GridDiagram g3 = edwards_grid(3, 256);
  for (int i = 1; i <= 3; ++i) {
    const FaceComplex p = project_onto_surface(g3, i);
    const Census c = region_census(p.complex, SurfaceSet::all(p.complex.label_bits()));
    EXPECT_TRUE(c.is_venn()) << i;
    EXPECT_EQ(c.region_count(), 4u);
  }
  // Along a curve neighbouring arcs differ in one label bit, so the
  // projection has one region per edge; short of 2^(n-1) edges it is not Venn.
  const GridDiagram g4 = edwards_grid(4, 256);
  const auto edges = surface_edge_counts(g4);
  int non_venn = 0;
  for (int i = 1; i <= 4; ++i) {
    const FaceComplex p = project_onto_surface(g4, i);
    const Census c = region_census(p.complex, SurfaceSet::all(p.complex.label_bits()));
    EXPECT_EQ(c.region_count(), edges[static_cast<std::size_t>(i - 1)]) << i;
    non_venn += c.is_venn() ? 0 : 1;
  }
  EXPECT_GT(non_venn, 0);
}
