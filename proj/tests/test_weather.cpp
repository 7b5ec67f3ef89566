// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "test_util.hpp"

namespace textaug {
namespace {

// Even-odd ray casting, independent of the convexity-based test.
bool inside(const std::vector<Point>& poly, Point p) {
  bool in = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const Point a = poly[i], b = poly[j];
    if ((a.y > p.y) != (b.y > p.y) && p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) in = !in;
  }
  return in;
}

double signed_area(const std::vector<Point>& poly) {
  double s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point a = poly[i], b = poly[(i + 1) % poly.size()];
    s += a.x * b.y - b.x * a.y;
  }
  return s / 2;
}

TEST(Plasma, SpansUnitInterval) {
  Rng rng(1);
  for (auto [w, h] : {std::pair{100, 32}, {17, 9}, {64, 64}}) {
    const auto p = plasma_fractal(w, h, 2.0, rng);
    ASSERT_EQ(p.size(), std::size_t(w) * h);
    EXPECT_FLOAT_EQ(*std::min_element(p.begin(), p.end()), 0.0f);
    EXPECT_FLOAT_EQ(*std::max_element(p.begin(), p.end()), 1.0f);
    const auto f = frost_texture(w, h, rng);
    EXPECT_GE(*std::min_element(f.begin(), f.end()), 0.0f);
    EXPECT_LE(*std::max_element(f.begin(), f.end()), 1.0f);
  }
}

TEST(Fog, NeverDarkens) {
  const Image img = testing::text_like(100, 32, 3, 4);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const Image out = fog(img, Magnitude(static_cast<int>(seed % 3)), rng);
    for (std::size_t i = 0; i < img.size(); ++i) ASSERT_GE(out.data()[i], img.data()[i]);
  }
}

TEST(Snow, OnlyBrightens) {
  const Image img = testing::text_like(100, 32, 1, 4);
  Rng rng(2);
  const Image out = snow(img, Magnitude(2), rng);
  for (std::size_t i = 0; i < img.size(); ++i) ASSERT_GE(out.data()[i], img.data()[i]);
  EXPECT_GT(testing::mean(out), testing::mean(img));
}

TEST(Frost, ChangeGrowsWithOpacity) {
  const Image img = testing::word_image(100, 32, 3, 1);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    double prev = 0;
    for (int mag = 0; mag < 3; ++mag) {
      Rng rng(seed);
      const double d = testing::mean_abs_diff(frost(img, Magnitude(mag), rng), img);
      EXPECT_GT(d, prev);
      prev = d;
    }
  }
}

TEST(ConvexHull, SquareWithInteriorAndCollinearPoints) {
  const auto hull = convex_hull({{0, 0}, {4, 0}, {2, 0}, {4, 4}, {0, 4}, {1, 2}, {2, 2}});
  ASSERT_EQ(hull.size(), 4u);
  EXPECT_GT(signed_area(hull), 0.0);
  EXPECT_NEAR(signed_area(hull), 16.0, 1e-12);
  EXPECT_TRUE(convex_polygon_contains(hull, {2, 2}));
  EXPECT_FALSE(convex_polygon_contains(hull, {5, 2}));
}

TEST(Shadow, InsideScaledOutsideUntouched) {
  const Image img = testing::random_image(100, 32, 3, 7);
  Rng rng(11);
  for (int mag = 0; mag < 3; ++mag) {
    const auto params = sample_shadow(100, 32, Magnitude(mag), rng);
    ASSERT_GE(params.polygon.size(), 3u);
    ASSERT_LE(params.polygon.size(), 6u);
    EXPECT_EQ(params.opacity, severity::kShadowOpacity[mag]);
    const Image out = shadow_with(img, params);
    for (int y = 0; y < 32; ++y)
      for (int x = 0; x < 100; ++x)
        for (int c = 0; c < 3; ++c) {
          const int v = img.at(x, y, c);
          const int expect = inside(params.polygon, {x + 0.5, y + 0.5})
                                 ? static_cast<int>(std::floor(v * (1 - params.opacity) + 0.5))
                                 : v;
          ASSERT_EQ(out.at(x, y, c), expect) << x << "," << y;
        }
  }
}

TEST(Shadow, PolygonStaysInOneHalf) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto p = sample_shadow(100, 32, Magnitude(1), rng);
    double x0 = 1e9, x1 = -1e9, y0 = 1e9, y1 = -1e9;
    for (const Point& q : p.polygon) x0 = std::min(x0, q.x), x1 = std::max(x1, q.x), y0 = std::min(y0, q.y), y1 = std::max(y1, q.y);
    const bool half = x1 <= 50 || x0 >= 50 || y1 <= 16 || y0 >= 16;
    EXPECT_TRUE(half);
  }
}

TEST(Shadow, TextStaysDarkerThanBackground) {
  Image img = Image::filled(100, 32, 1, 255);
  for (int y = 10; y < 22; ++y)
    for (int x = 0; x < 100; x += 3) img.at(x, y) = 0;
  Rng rng(8);
  for (int i = 0; i < 30; ++i) {
    const auto params = sample_shadow(100, 32, Magnitude(2), rng);
    const Image out = shadow_with(img, params);
    int max_text = -1, min_bg = 256;
    for (int y = 0; y < 32; ++y)
      for (int x = 0; x < 100; ++x)
        if (convex_polygon_contains(params.polygon, {x + 0.5, y + 0.5})) {
          if (img.at(x, y) == 0) max_text = std::max<int>(max_text, out.at(x, y));
          else min_bg = std::min<int>(min_bg, out.at(x, y));
        }
    if (max_text >= 0 && min_bg < 256) EXPECT_LT(max_text, min_bg);
  }
}

TEST(Rain, MoreDropsAtHigherMagnitudeAndBoundedAngle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng a(seed), b(seed);
    const auto r0 = sample_rain(100, 32, Magnitude(0), a);
    const auto r2 = sample_rain(100, 32, Magnitude(2), b);
    EXPECT_GT(r2.streaks.size(), r0.streaks.size());
    EXPECT_LT(r0.opacity, r2.opacity);
    for (const auto& s : r2.streaks) {
      const double angle = std::atan2(s.to.x - s.from.x, s.to.y - s.from.y) * 180 / std::numbers::pi;
      EXPECT_LE(std::abs(angle), 30.0 + 1e-9);
      const double len = std::hypot(s.to.x - s.from.x, s.to.y - s.from.y);
      EXPECT_GE(len, 0.25 * 32 - 1e-9);
      EXPECT_LE(len, 0.5 * 32 + 1e-9);
    }
  }
}

TEST(Rain, StreakPixelsMoveTowardRainLevel) {
  const Image img = Image::filled(100, 32, 1, 20);
  Rng rng(3);
  const auto params = sample_rain(100, 32, Magnitude(1), rng);
  const Image out = rain_with(img, params);
  for (std::size_t i = 0; i < img.size(); ++i) {
    ASSERT_GE(out.data()[i], 20);
    ASSERT_LE(out.data()[i], 200);
  }
  EXPECT_GT(testing::mean(out), 20.0);
}

TEST(Weather, DeterministicPerSeed) {
  const Image img = testing::text_like(100, 32, 3, 1);
  for (WeatherKind kind : {WeatherKind::kFog, WeatherKind::kSnow, WeatherKind::kFrost, WeatherKind::kRain,
                           WeatherKind::kShadow}) {
    Rng a(4), b(4);
    EXPECT_EQ(weather(img, kind, Magnitude(1), a), weather(img, kind, Magnitude(1), b));
  }
}

}  // namespace
}  // namespace textaug
