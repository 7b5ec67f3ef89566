// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "test_util.hpp"

namespace textaug {
namespace {

std::pair<int, int> argmax(const Image& img) {
  int bx = 0, by = 0, best = -1;
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x)
      if (img.at(x, y) > best) best = img.at(x, y), bx = x, by = y;
  return {bx, by};
}

TEST(PerspectivePoints, MidpointSamplerExample) {
  const auto pts = perspective_points(100, 32, 0.1, HorizonSide::kLeft, testing::midpoint);
  ASSERT_EQ(pts.size(), 4u);
  EXPECT_NEAR(pts.destination()[0].y, 4.8, 1e-9);
  EXPECT_EQ(pts.destination()[0].x, 0.0);
  EXPECT_NEAR(pts.destination()[2].y, 27.2, 1e-9);
  EXPECT_EQ(pts.destination()[1], (Point{100, 0}));
  EXPECT_EQ(pts.destination()[3], (Point{100, 32}));
  const auto right = perspective_points(100, 32, 0.1, HorizonSide::kRight, testing::midpoint);
  EXPECT_EQ(right.destination()[0], (Point{0, 0}));
  EXPECT_NEAR(right.destination()[1].y, 4.8, 1e-9);
  EXPECT_NEAR(right.destination()[3].y, 27.2, 1e-9);
}

TEST(Homography, MapsCornersAndKeepsFixedEdge) {
  const auto pts = perspective_points(100, 32, 0.2, HorizonSide::kLeft, testing::midpoint);
  const auto h = homography(pts);
  for (std::size_t i = 0; i < 4; ++i) {
    const Point p = apply_homography(h, pts.source()[i]);
    EXPECT_NEAR(p.x, pts.destination()[i].x, 1e-9);
    EXPECT_NEAR(p.y, pts.destination()[i].y, 1e-9);
  }
  for (double y = 0; y <= 32; y += 4) EXPECT_NEAR(apply_homography(h, {100, y}).x, 100.0, 1e-9);
}

TEST(Perspective, FixedEdgeColumnUnchanged) {
  const Image img = testing::random_image(100, 32, 1, 3);
  const auto pts = perspective_points(100, 32, 0.3, HorizonSide::kLeft, testing::midpoint);
  const Image out = perspective_with(img, pts);
  // The far edge moves by well under a pixel near x = w.
  double diff = 0;
  for (int y = 0; y < 32; ++y) diff += std::abs(out.at(99, y) - img.at(99, y));
  EXPECT_LT(diff / 32, 25.0);
  Rng rng(0);
  EXPECT_EQ(apply("Perspective", img, Magnitude(2), 0.0, rng), img);
}

TEST(ShrinkPoints, PinnedExample) {
  const auto pts = shrink_points(100, 32, 100.0 / 3.0 * 0.25, 16 * 0.25);
  EXPECT_NEAR(pts.destination()[0].x, 8.3333, 1e-4);
  EXPECT_NEAR(pts.destination()[0].y, 4.0, 1e-12);
  EXPECT_NEAR(pts.destination()[3].x, 91.6667, 1e-4);
  EXPECT_NEAR(pts.destination()[3].y, 28.0, 1e-12);
}

TEST(Shrink, ParametersRespectBounds) {
  Rng rng(12);
  for (int mag = 0; mag < 3; ++mag) {
    const double k = severity::kShrinkExtent[mag];
    for (int i = 0; i < 500; ++i) {
      const auto p = sample_shrink_params(100, 32, Magnitude(mag), rng);
      EXPECT_GE(p.dw, 100 / 3.0 * k);
      EXPECT_LT(p.dw, 100 / 3.0 * (k + 0.1));
      EXPECT_LT(p.dw, 50.0);
      EXPECT_LT(p.dh, 16.0);
      EXPECT_LE(std::abs(p.offset), p.horizontal ? p.dw : p.dh);
    }
  }
}

TEST(Shrink, CenterPixelStaysNearCenter) {
  Image img(100, 32, 1);
  img.at(50, 16) = 255;
  const Image out = shrink_with(img, {100 / 3.0 * 0.25, 4.0, true, 0}, 0);
  const auto [x, y] = argmax(out);
  EXPECT_LE(std::abs(x - 50), 1);
  EXPECT_LE(std::abs(y - 16), 1);
}

TEST(Shrink, InteriorBoxStaysInFrame) {
  // Content inside the inset region never leaves the frame after translation.
  Image img = Image::filled(100, 32, 1, 255);
  for (int y = 8; y < 24; ++y)
    for (int x = 34; x < 66; ++x) img.at(x, y) = 0;
  Rng rng(21);
  for (int i = 0; i < 50; ++i) {
    const auto p = sample_shrink_params(100, 32, Magnitude(2), rng);
    const Image out = shrink_with(img, p, 255);
    double ink = 0;
    for (auto v : out.data()) ink += 255 - v;
    EXPECT_GT(ink, 0.0);
  }
}

TEST(Rotate, ZeroAngleIsNearIdentity) {
  const Image img = testing::random_image(100, 32, 3, 5);
  EXPECT_LE(testing::max_abs_diff(rotate_with(img, 0.0), img), 1);
}

TEST(Rotate, OneHotFollowsAnalyticRotation) {
  for (auto [x0, y0] : {std::pair{70, 10}, {40, 20}, {55, 5}}) {
    Image img(100, 32, 1);
    img.at(x0, y0) = 255;
    const Image out = rotate_with(img, 15.0, 0);
    const Point expect = rotate_point({x0 + 0.5, y0 + 0.5}, 100, 32, 15.0);
    const auto [x, y] = argmax(out);
    EXPECT_LE(std::hypot(x + 0.5 - expect.x, y + 0.5 - expect.y), 1.0) << x0 << "," << y0;
  }
}

TEST(Rotate, AngleWithinTableAndSignBalanced) {
  Rng rng(99);
  int negative = 0;
  for (int i = 0; i < 4000; ++i) {
    const double a = sample_rotate_angle(Magnitude(1), rng);
    EXPECT_GE(std::abs(a), 15.0);
    EXPECT_LT(std::abs(a), 30.0);
    negative += a < 0;
  }
  EXPECT_NEAR(negative / 4000.0, 0.5, 0.03);
}

}  // namespace
}  // namespace textaug
