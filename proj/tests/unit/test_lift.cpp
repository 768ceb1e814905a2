#include <gtest/gtest.h>

#include <bit>
#include <vector>

#include "venn/analysis.hpp"
#include "venn/edwards.hpp"
#include "venn/grid.hpp"
#include "venn/lift.hpp"
#include "venn/trace.hpp"

using namespace venn;

TEST(LiftLayers, IndexOrderIsStaggeredSlabs) {
  for (int n = 1; n <= 6; ++n) {
    const auto mask = lift_layer_masks(n, {});
    ASSERT_EQ(mask.size(), static_cast<std::size_t>(2 * n + 2));
    for (int i = 1; i <= n; ++i) {
      for (int t = 0; t < 2 * n + 2; ++t) {
        const bool active = (mask[static_cast<std::size_t>(t)] >> (i - 1)) & 1u;
        EXPECT_EQ(active, t >= i + 1 && t <= n + i) << "n=" << n << " i=" << i << " t=" << t;
      }
    }
    EXPECT_EQ(lift_layer_masks(n, LiftOrder::identity(n)), mask);
  }
}

TEST(LiftLayers, OrderMovesSlabEnds) {
  // Surface 3 enters third and leaves first: layers [4, 4+1].
  const auto mask = lift_layer_masks(3, {{1, 2, 3}, {3, 1, 2}});
  std::vector<int> active;
  for (std::size_t t = 0; t < mask.size(); ++t) {
    if (mask[t] & 0b100) active.push_back(static_cast<int>(t));
  }
  EXPECT_EQ(active, (std::vector<int>{4}));
  // Every layer boundary switches at most one surface.
  for (std::size_t t = 0; t + 1 < mask.size(); ++t) EXPECT_LE(std::popcount(mask[t] ^ mask[t + 1]), 1);
}

TEST(LiftLayers, RejectsBadOrders) {
  EXPECT_THROW(lift_layer_masks(3, {{1, 2}, {1, 2, 3}}), PreconditionError);
  EXPECT_THROW(lift_layer_masks(3, {{1, 1, 2}, {1, 2, 3}}), PreconditionError);
  EXPECT_THROW(lift_layer_masks(3, {{1, 2, 4}, {1, 2, 3}}), PreconditionError);
}

TEST(Lift, SmallEdwardsLiftsAreFullyReducible) {
  const std::size_t expected_edges[] = {0, 0, 4, 12};
  for (int n = 2; n <= 3; ++n) {
    const GridDiagram lifted = lift_prism(edwards_grid(n, 64));
    EXPECT_EQ(lifted.dimension(), 3);
    EXPECT_EQ(lifted.shape().back(), static_cast<std::size_t>(2 * n + 2));
    EXPECT_TRUE(validate_grid(lifted).ok());
    Analyzer a(lifted);
    EXPECT_TRUE(a.is_venn());
    EXPECT_TRUE(a.is_simple());
    EXPECT_TRUE(a.fully_reducible_bruteforce().holds);
    EXPECT_EQ(a.total_edges(), expected_edges[n]);
  }
}

// With the index order, the layer where only surfaces 3 and 4 are active
// holds a piece of "inside 3 only" cut off from the rest of that region.
TEST(Lift, IndexOrderSplitsARegionOfEdwardsFour) {
  const GridDiagram lifted = lift_prism(edwards_grid(4, 64));
  Analyzer a(lifted);
  EXPECT_FALSE(a.is_venn());
  const Label inside3_only = 0b1011;
  EXPECT_EQ(a.census().components.at(inside3_only), 2u);
}

TEST(Lift, RegionLevelLiftMatchesGridLift) {
  const GridDiagram base = edwards_grid(4, 64);
  const LabeledComplex regions = region_graph(base, 4);
  const std::vector<LiftOrder> orders = {
      {}, {{1, 2, 3, 4}, {1, 3, 2, 4}}, {{4, 3, 2, 1}, {1, 2, 3, 4}}, {{2, 4, 1, 3}, {3, 1, 4, 2}}};
  for (const auto& o : orders) {
    const Census fast = region_census(lift_region_graph(regions, 4, o));
    const Census slow = region_census(lift_prism(base, o), SurfaceSet::all(4));
    EXPECT_EQ(fast.components, slow.components);
  }
}

TEST(Lift, SearchFindsFullyReducibleLiftOfEdwardsFour) {
  const GridDiagram base = edwards_grid(4, 64);
  const auto orders = find_lift_orders(base, {1, true});
  ASSERT_TRUE(orders.has_value());
  ASSERT_EQ(orders->size(), 1u);
  EXPECT_EQ(orders->front(), (LiftOrder{{1, 2, 3, 4}, {1, 3, 2, 4}}));
  Analyzer a(lift_prism(base, orders->front()));
  EXPECT_TRUE(a.is_venn());
  EXPECT_TRUE(a.fully_reducible_bruteforce().holds);
  EXPECT_EQ(a.total_edges(), 32u);
}

TEST(Lift, SearchKeepsIndexOrderWhenItWorks) {
  const auto orders = find_lift_orders(edwards_grid(3, 64), {2, true});
  ASSERT_TRUE(orders.has_value());
  for (const auto& o : *orders) EXPECT_EQ(o, LiftOrder::identity(3));
}

TEST(Lift, RejectsInvalidInput) {
  GridDiagram g(1, {4, 4});
  g.set_label(0, 0);
  EXPECT_THROW(lift_prism(g), PreconditionError);
  EXPECT_THROW(find_lift_orders(edwards_grid(2, 32), {0, false}), PreconditionError);
}

TEST(Trace, EdwardsFourCounts) {
  const CombinatorialMap m = trace_map(edwards_grid(4, 512));
  EXPECT_TRUE(validate_map(m).ok());
  const MapCounts c = map_counts(m);
  EXPECT_EQ(c.vertices, 14);
  EXPECT_EQ(c.edges, 28);
  EXPECT_EQ(c.faces, 16);
}

TEST(Trace, EdwardsFiveEuler) {
  const CombinatorialMap m = trace_map(edwards_grid(5, 512));
  const MapCounts c = map_counts(m);
  EXPECT_EQ(c.vertices, 30);
  EXPECT_EQ(c.edges, 60);
  EXPECT_EQ(c.faces, 32);
  EXPECT_EQ(c.vertices - c.edges + c.faces, 2);
}

TEST(Trace, LoneCurveBecomesFreeCurve) {
  const CombinatorialMap m = trace_map(edwards_grid(1, 64));
  EXPECT_EQ(m.dart_count(), 0);
  EXPECT_EQ(m.free_curves.size(), 1u);
}

TEST(Trace, AgreesWithBuiltinTwoCircles) {
  EXPECT_TRUE(isomorphic(trace_map(edwards_grid(2, 128)), builtin_map(2)));
  EXPECT_TRUE(isomorphic(trace_map(edwards_grid(3, 128)), builtin_map(3)));
}

TEST(Trace, RejectsNonPlanarInput) {
  EXPECT_THROW(trace_map(lift_prism(edwards_grid(2, 32))), PreconditionError);
}
