// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "test_util.hpp"

namespace textaug {
namespace {

constexpr BlurKind kBlurs[] = {BlurKind::kGaussian, BlurKind::kDefocus, BlurKind::kMotion, BlurKind::kGlass,
                               BlurKind::kZoom};

double variance(const Image& img) {
  const double m = testing::mean(img);
  double s = 0;
  for (auto v : img.data()) s += (v - m) * (v - m);
  return s / static_cast<double>(img.size());
}

TEST(Noise, GaussianStdMatchesSigma) {
  const Image img = Image::filled(100, 32, 1, 128);
  const double sigma = 0.08;
  Rng rng(1);
  const Image out = noise_with(img, NoiseKind::kGaussian, sigma, rng);
  double s = 0, s2 = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double d = out.data()[i] - 128.0;
    s += d;
    s2 += d * d;
  }
  const double n = static_cast<double>(out.size());
  const double sd = std::sqrt(s2 / n - (s / n) * (s / n));
  EXPECT_NEAR(sd, sigma * 255, 0.05 * sigma * 255);
}

TEST(Noise, ShotMeanPreserved) {
  const Image img = Image::filled(100, 32, 1, 128);
  Rng rng(2);
  const Image out = noise_with(img, NoiseKind::kShot, 60, rng);
  EXPECT_NEAR(testing::mean(out), 128.0, 0.02 * 128.0);
}

TEST(Noise, ImpulseAlteredFraction) {
  const Image img = Image::filled(256, 256, 3, 100);
  for (double p : {0.03, 0.06, 0.09}) {
    Rng rng(static_cast<std::uint64_t>(p * 1000));
    const Image out = noise_with(img, NoiseKind::kImpulse, p, rng);
    std::size_t changed = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
      const auto v = out.data()[i];
      ASSERT_TRUE(v == 100 || v == 0 || v == 255);
      changed += v != 100;
    }
    EXPECT_NEAR(changed / static_cast<double>(out.size()), p, 0.03 * p);
  }
}

TEST(Noise, SpeckleFixesZero) {
  const Image zero(100, 32, 3);
  Rng rng(3);
  EXPECT_EQ(noise(zero, NoiseKind::kSpeckle, Magnitude(2), rng), zero);
}

TEST(Noise, ParametersFollowTable) {
  EXPECT_EQ(noise_parameter(NoiseKind::kGaussian, Magnitude(1)), 0.12);
  EXPECT_EQ(noise_parameter(NoiseKind::kShot, Magnitude(2)), 12.0);
  EXPECT_EQ(noise_parameter(NoiseKind::kImpulse, Magnitude(0)), 0.03);
  EXPECT_EQ(noise_parameter(NoiseKind::kSpeckle, Magnitude(2)), 0.35);
}

TEST(Blur, ConstantImageUnchanged) {
  for (int c : {1, 3}) {
    const Image img = Image::filled(100, 32, c, 173);
    for (BlurKind kind : kBlurs)
      for (int mag = 0; mag < 3; ++mag) {
        Rng rng(mag);
        EXPECT_EQ(blur(img, kind, Magnitude(mag), rng), img) << static_cast<int>(kind) << " " << mag;
      }
  }
}

TEST(Blur, GaussianVarianceDecreasesWithMagnitude) {
  const Image noise_img = testing::random_image(100, 32, 1, 9);
  double prev = variance(noise_img);
  for (int mag = 0; mag < 3; ++mag) {
    Rng rng(0);
    const double v = variance(blur(noise_img, BlurKind::kGaussian, Magnitude(mag), rng));
    EXPECT_LT(v, prev) << mag;
    prev = v;
  }
}

TEST(Blur, KernelsAreNormalized) {
  for (int mag = 0; mag < 3; ++mag) {
    const auto d = severity::kDefocus[mag];
    const auto disk = disk_kernel(d.radius, d.alias_sigma);
    EXPECT_NEAR(std::accumulate(disk.begin(), disk.end(), 0.0), 1.0, 1e-6);
    const int side = static_cast<int>(std::lround(std::sqrt(double(disk.size()))));
    for (int y = 0; y < side; ++y)
      for (int x = 0; x < side; ++x) EXPECT_FLOAT_EQ(disk[y * side + x], disk[x * side + y]);
    for (double angle : {-45.0, -10.0, 0.0, 30.0}) {
      int ms = 0;
      const auto k = motion_kernel(severity::kMotion[mag].length, angle, severity::kMotion[mag].sigma, ms);
      EXPECT_EQ(k.size(), std::size_t(ms) * ms);
      EXPECT_NEAR(std::accumulate(k.begin(), k.end(), 0.0), 1.0, 1e-6);
    }
  }
}

TEST(Blur, MotionImpulseResponseIsSegment) {
  for (int mag = 0; mag < 3; ++mag) {
    const auto m = severity::kMotion[mag];
    Image img(64, 64, 1);
    img.at(32, 32) = 255;
    const Image out = motion_blur_with(img, m.length, 0.0, m.sigma);
    int lo = 64, hi = -1;
    for (int y = 0; y < 64; ++y)
      for (int x = 0; x < 64; ++x)
        if (out.at(x, y) > 0) {
          EXPECT_EQ(y, 32);
          lo = std::min(lo, x);
          hi = std::max(hi, x);
        }
    EXPECT_LE(std::abs((hi - lo + 1) - m.length), 1) << mag;
    EXPECT_LE(std::abs((lo + hi) / 2.0 - 32), 1.0);
  }
}

TEST(Blur, LinearBlursPreserveInteriorMean) {
  const Image img = testing::random_image(160, 160, 1, 12);
  for (BlurKind kind : {BlurKind::kGaussian, BlurKind::kDefocus, BlurKind::kMotion}) {
    Rng rng(1);
    const Image out = blur(img, kind, Magnitude(2), rng);
    double a = 0, b = 0;
    for (int y = 20; y < 140; ++y)
      for (int x = 20; x < 140; ++x) a += img.at(x, y), b += out.at(x, y);
    EXPECT_NEAR(b / a, 1.0, 0.005) << static_cast<int>(kind);
  }
}

TEST(Blur, GlassAndZoomDeterministic) {
  const Image img = testing::text_like(100, 32, 3, 2);
  for (BlurKind kind : {BlurKind::kGlass, BlurKind::kZoom}) {
    Rng a(5), b(5);
    EXPECT_EQ(blur(img, kind, Magnitude(2), a), blur(img, kind, Magnitude(2), b));
  }
}

}  // namespace
}  // namespace textaug
