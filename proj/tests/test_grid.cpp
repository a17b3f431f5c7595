#include <gtest/gtest.h>

#include "support.hpp"

using namespace thinness;
using namespace thinness::grid_family;

TEST(GridBounds, Values) {
  EXPECT_EQ(thin_bounds(3, 3), (Bounds{1, 2}));
  EXPECT_EQ(thin_bounds(7, 4), thin_bounds(4, 7));
  EXPECT_EQ(thin_bounds(10, 20), (Bounds{3, 6}));
  EXPECT_EQ(thin_bounds(1, 5), (Bounds{1, 1}));
  EXPECT_EQ(fp_gr2_value(3), 2u);
  EXPECT_EQ(fp_gr2_value(4), 3u);
  EXPECT_EQ(fp_grn_bounds(5), (Bounds{5, 5}));
  EXPECT_EQ(fp_grn_bounds(9), (Bounds{13, 17}));
  EXPECT_THROW(thin_bounds(0, 2), std::invalid_argument);
  for (std::size_t n = 1; n <= 30; ++n) EXPECT_LE(fp_grn_bounds(n).lower, fp_grn_bounds(n).upper);
}

TEST(GridThin, LayoutsVerify) {
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::size_t m = n; m <= 12; ++m) {
      const auto g = grid(n, m);
      const Layout l = thin_layout(n, m);
      EXPECT_TRUE(is_consistent(g.graph, l)) << n << "x" << m;
      EXPECT_EQ(width(l), (n + 2) / 2) << n << "x" << m;
      EXPECT_EQ(width(l), thin_bounds(n, m).upper);
    }
}

TEST(GridThin, TallGridsUseTheShortSide) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t m = 1; m < n; ++m) {
      const auto g = grid(n, m);
      const Layout l = thin_layout(n, m);
      EXPECT_TRUE(is_consistent(g.graph, l)) << n << "x" << m;
      EXPECT_EQ(width(l), (m + 2) / 2);
    }
}

TEST(GridFp, TwoRowLayouts) {
  for (std::size_t n = 1; n <= 14; ++n) {
    const auto g = grid(2, n);
    const Layout l = fp_gr2_layout(n);
    EXPECT_TRUE(verify(g.graph, l, variants::fp)) << n;
    EXPECT_EQ(width(l), fp_gr2_value(n));
  }
}

TEST(GridFp, SquareLayouts) {
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto g = grid(n, n);
    const Layout l = fp_grn_layout(n);
    EXPECT_TRUE(verify(g.graph, l, variants::fp)) << n;
    const std::size_t half = (n - 1 + 1) / 2;
    EXPECT_EQ(width(l), half * half + 1);
    EXPECT_GE(width(l), fp_grn_bounds(n).lower);
    EXPECT_LE(width(l), fp_grn_bounds(n).upper);
  }
}

TEST(GridExact, SmallGrids) {
  EXPECT_EQ(exact::exact_value(grid(3, 3).graph, variants::thin).value, 2u);
  EXPECT_EQ(exact::exact_value(grid(2, 3).graph, variants::fp).value, 2u);
  EXPECT_EQ(exact::exact_value(grid(2, 4).graph, variants::fp).value, 3u);
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(exact::exact_value(grid(2, n).graph, variants::fp).value, fp_gr2_value(n));
}
