// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>

#include "test_util.hpp"

namespace textaug {
namespace {

constexpr GridKind kKinds[] = {GridKind::kGrid, GridKind::kVGrid, GridKind::kHGrid, GridKind::kRectGrid,
                               GridKind::kEllipseGrid};

int column_runs(const Mask& m) {
  int runs = 0;
  bool prev = false;
  for (int x = 0; x < m.width(); ++x) {
    bool all = true, any = false;
    for (int y = 0; y < m.height(); ++y) all = all && m.at(x, y), any = any || m.at(x, y);
    EXPECT_EQ(all, any) << "VGrid columns are all-or-nothing";
    if (all && !prev) ++runs;
    prev = all;
  }
  return runs;
}

// Lines start at phase + i * gap for every integer i; count the ones that
// overlap [0, w).
int expected_runs(int w, const GridSpec& s) {
  int n = 0;
  for (int start = s.phase - 4 * s.gap; start < w; start += s.gap)
    if (start + s.line_width > 0) ++n;
  return n;
}

int largest_masked_square(const Mask& m) {
  std::vector<int> dp(std::size_t(m.width()) * m.height(), 0);
  int best = 0;
  for (int y = 0; y < m.height(); ++y)
    for (int x = 0; x < m.width(); ++x) {
      if (!m.at(x, y)) continue;
      int v = 1;
      if (x > 0 && y > 0)
        v = 1 + std::min({dp[std::size_t(y - 1) * m.width() + x], dp[std::size_t(y) * m.width() + x - 1],
                          dp[std::size_t(y - 1) * m.width() + x - 1]});
      dp[std::size_t(y) * m.width() + x] = v;
      best = std::max(best, v);
    }
  return best;
}

TEST(GridSpec, GapShrinksWithMagnitude) {
  for (int h = 16; h <= 160; ++h) {
    const auto g0 = grid_spec(GridKind::kVGrid, 100, h, Magnitude(0));
    const auto g1 = grid_spec(GridKind::kVGrid, 100, h, Magnitude(1));
    const auto g2 = grid_spec(GridKind::kVGrid, 100, h, Magnitude(2));
    EXPECT_GT(g0.gap, g1.gap) << h;
    EXPECT_GT(g1.gap, g2.gap) << h;
    EXPECT_LE(g0.line_width, std::max(1, h / 16));
    EXPECT_EQ(g0.line_width, g2.line_width);
    EXPECT_EQ(g0.mask_value, 0);
  }
  EXPECT_EQ(grid_spec(GridKind::kGrid, 100, 32, Magnitude(0)).line_width, 2);
  EXPECT_EQ(grid_spec(GridKind::kGrid, 100, 32, Magnitude(0)).gap, 16);
  EXPECT_EQ(grid_spec(GridKind::kGrid, 100, 32, Magnitude(1)).gap, 10);
  EXPECT_EQ(grid_spec(GridKind::kGrid, 100, 32, Magnitude(2)).gap, 8);
}

TEST(GridMask, VGridRunCount) {
  for (int mag = 0; mag < 3; ++mag) {
    GridSpec s = grid_spec(GridKind::kVGrid, 100, 32, Magnitude(mag));
    EXPECT_EQ(column_runs(grid_mask(s, 100, 32)), (100 + s.gap - 1) / s.gap) << mag;
    for (s.phase = 0; s.phase < s.gap; ++s.phase)
      EXPECT_EQ(column_runs(grid_mask(s, 100, 32)), expected_runs(100, s)) << mag << " " << s.phase;
  }
}

TEST(GridMask, GridIsUnionOfLines) {
  Rng rng(5);
  for (int mag = 0; mag < 3; ++mag) {
    GridSpec g = grid_spec(GridKind::kGrid, 100, 32, Magnitude(mag));
    g.phase = static_cast<int>(rng.integer(0, g.gap - 1));
    GridSpec v = g, h = g;
    v.kind = GridKind::kVGrid;
    h.kind = GridKind::kHGrid;
    const Mask mg = grid_mask(g, 100, 32), mv = grid_mask(v, 100, 32), mh = grid_mask(h, 100, 32);
    for (int y = 0; y < 32; ++y)
      for (int x = 0; x < 100; ++x) ASSERT_EQ(mg.at(x, y), mv.at(x, y) || mh.at(x, y));
  }
  // The random draw is shared too: same seed gives the same phase.
  Rng a(9), b(9), c(9);
  const Mask g = grid_mask(GridKind::kGrid, 100, 32, Magnitude(1), a);
  const Mask v = grid_mask(GridKind::kVGrid, 100, 32, Magnitude(1), b);
  const Mask h = grid_mask(GridKind::kHGrid, 100, 32, Magnitude(1), c);
  for (int y = 0; y < 32; ++y)
    for (int x = 0; x < 100; ++x) ASSERT_EQ(g.at(x, y), v.at(x, y) || h.at(x, y));
}

TEST(GridMask, FractionBelowHalfAndMonotone) {
  for (auto [w, h] : {std::pair{32, 32}, {100, 32}, {128, 40}, {64, 64}, {200, 48}, {33, 97}}) {
    for (GridKind kind : kKinds) {
      double prev = -1.0;
      for (int mag = 0; mag < 3; ++mag) {
        GridSpec s = grid_spec(kind, w, h, Magnitude(mag));
        const double f0 = grid_mask(s, w, h).fraction();
        EXPECT_GE(f0, prev) << w << "x" << h << " mag " << mag;
        prev = f0;
        for (s.phase = 0; s.phase < s.gap; ++s.phase)
          EXPECT_LT(grid_mask(s, w, h).fraction(), 0.5) << w << "x" << h << " mag " << mag;
      }
    }
  }
}

TEST(GridMask, NoLargeContiguousHole) {
  Rng rng(3);
  for (GridKind kind : kKinds)
    for (int mag = 0; mag < 3; ++mag)
      for (int i = 0; i < 10; ++i) {
        const Mask m = grid_mask(kind, 100, 32, Magnitude(mag), rng);
        const auto s = grid_spec(kind, 100, 32, Magnitude(mag));
        const int side = largest_masked_square(m);
        EXPECT_LE(side * side, 4 * s.gap * s.line_width);
      }
}

TEST(GridMask, RequiresEightPixels) {
  Rng rng(0);
  EXPECT_THROW(grid_mask(GridKind::kGrid, 7, 32, Magnitude(0), rng), Error);
  EXPECT_NO_THROW(grid_mask(GridKind::kGrid, 8, 8, Magnitude(2), rng));
}

TEST(ApplyPattern, OnlyMaskedPixelsChange) {
  const Image img = testing::random_image(100, 32, 3, 8);
  for (GridKind kind : kKinds) {
    Rng a(4), b(4);
    const Mask m = grid_mask(kind, 100, 32, Magnitude(1), a);
    const Image out = apply_pattern(img, kind, Magnitude(1), b);
    for (int y = 0; y < 32; ++y)
      for (int x = 0; x < 100; ++x)
        for (int c = 0; c < 3; ++c) ASSERT_EQ(out.at(x, y, c), m.at(x, y) ? 0 : img.at(x, y, c));
  }
}

TEST(ApplyPattern, WhiteImageMeanMatchesFraction) {
  const Image white = Image::filled(100, 32, 1, 255);
  for (GridKind kind : kKinds) {
    Rng a(6), b(6);
    const double f = grid_mask(kind, 100, 32, Magnitude(2), a).fraction();
    EXPECT_NEAR(testing::mean(apply_pattern(white, kind, Magnitude(2), b)), 255 * (1 - f), 1e-9);
  }
}

}  // namespace
}  // namespace textaug
