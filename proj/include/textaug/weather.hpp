// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Weather group: Fog, Snow, Frost, Rain, Shadow. All generators are
// procedural and draw every random choice from the supplied Rng.

#include <vector>

#include "textaug/image.hpp"
#include "textaug/registry.hpp"
#include "textaug/tps.hpp"

namespace textaug {

enum class WeatherKind { kFog, kSnow, kFrost, kRain, kShadow };

/// Diamond-square plasma on a (2^k + 1)-sided grid covering width x height,
/// rescaled to [0,1]. Larger `roughness` damps fine detail faster.
std::vector<float> plasma_fractal(int width, int height, double roughness, Rng& rng);

/// Crystalline ridge texture in [0,1], bright along thin value-noise ridges.
std::vector<float> frost_texture(int width, int height, Rng& rng);

/// out = x + opacity * plasma * (1 - x); never darkens.
Image fog(const Image& img, Magnitude mag, Rng& rng);
Image snow(const Image& img, Magnitude mag, Rng& rng);
Image frost(const Image& img, Magnitude mag, Rng& rng);

struct RainStreak {
  Point from;
  Point to;
};

struct RainParams {
  std::vector<RainStreak> streaks;
  double opacity;
};

RainParams sample_rain(int width, int height, Magnitude mag, Rng& rng);

/// Anti-aliased one-pixel streaks blended toward a light gray.
Image rain_with(const Image& img, const RainParams& params);
Image rain(const Image& img, Magnitude mag, Rng& rng);

struct ShadowParams {
  std::vector<Point> polygon;  // convex, counter-clockwise
  double opacity;
};

/// Convex hull of 3-6 points drawn in a random half of the image.
ShadowParams sample_shadow(int width, int height, Magnitude mag, Rng& rng);

/// Pixel centers inside the polygon become round(v * (1 - opacity)); the
/// rest are copied unchanged.
Image shadow_with(const Image& img, const ShadowParams& params);
Image shadow(const Image& img, Magnitude mag, Rng& rng);

/// Andrew's monotone chain; counter-clockwise in y-up orientation, no
/// collinear vertices.
std::vector<Point> convex_hull(std::vector<Point> points);
bool convex_polygon_contains(const std::vector<Point>& polygon, Point p);

Image weather(const Image& img, WeatherKind kind, Magnitude mag, Rng& rng);

}  // namespace textaug
