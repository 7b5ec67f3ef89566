// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Magnitude -> parameter tables for every multi-level op. Index with
// Magnitude::level(). Bump kSeverityTableVersion whenever a value changes;
// golden outputs are only comparable within one version.
//
// Noise and most blur rows are the first three severities of the
// ImageNet-C corruption constants (Hendrycks & Dietterich); the rest are
// local choices that only need to grow with the level.

#include <array>

namespace textaug::severity {

inline constexpr int kSeverityTableVersion = 1;

template <class T>
using PerLevel = std::array<T, 3>;

struct Range {
  double lo;
  double hi;
};

// --- Warp -------------------------------------------------------------------
/// Curve arc radius as a multiple of the square side.
inline constexpr PerLevel<Range> kCurveRadius{{{1.5, 2.0}, {1.0, 1.5}, {0.5, 1.0}}};
/// Band thickness t = side/2 * rand(lo, hi).
inline constexpr Range kCurveThickness{0.4, 0.5};
/// Distort / Stretch extent k.
inline constexpr PerLevel<double> kDistortExtent{0.2, 0.3, 0.4};

// --- Geometry ---------------------------------------------------------------
inline constexpr PerLevel<double> kPerspectiveExtent{0.1, 0.2, 0.3};
inline constexpr PerLevel<double> kShrinkExtent{0.2, 0.35, 0.5};
/// Rotation magnitude in degrees; the sign is a fair coin.
inline constexpr PerLevel<Range> kRotateDegrees{{{5.0, 15.0}, {15.0, 30.0}, {30.0, 45.0}}};

// --- Noise (normalized intensities) ----------------------------------------
inline constexpr PerLevel<double> kGaussianNoiseSigma{0.08, 0.12, 0.18};
inline constexpr PerLevel<double> kShotNoisePhotons{60.0, 25.0, 12.0};
inline constexpr PerLevel<double> kImpulseNoiseAmount{0.03, 0.06, 0.09};
inline constexpr PerLevel<double> kSpeckleNoiseSigma{0.15, 0.20, 0.35};

// --- Blur -------------------------------------------------------------------
inline constexpr PerLevel<double> kGaussianBlurSigma{0.5, 1.0, 1.5};

struct Defocus {
  int radius;
  double alias_sigma;
};
inline constexpr PerLevel<Defocus> kDefocus{{{3, 0.1}, {4, 0.5}, {6, 0.5}}};

struct Motion {
  int length;
  double sigma;
};
inline constexpr PerLevel<Motion> kMotion{{{10, 3.0}, {15, 5.0}, {15, 8.0}}};
/// Streak direction is drawn uniformly from this range, degrees.
inline constexpr Range kMotionAngle{-45.0, 45.0};

struct Glass {
  double sigma;
  int max_delta;
  int iterations;
};
inline constexpr PerLevel<Glass> kGlass{{{0.7, 1, 2}, {0.9, 2, 1}, {1.0, 2, 3}}};

/// Zoom factors run from 1 to this maximum in kZoomSteps equal steps.
inline constexpr PerLevel<double> kZoomMax{1.10, 1.15, 1.20};
inline constexpr int kZoomSteps = 10;

// --- Weather ----------------------------------------------------------------
struct Fog {
  double opacity;
  double roughness;  // amplitude decay per octave of the plasma fractal
};
inline constexpr PerLevel<Fog> kFog{{{0.3, 2.0}, {0.45, 2.0}, {0.6, 1.7}}};

struct Snow {
  double density;    // fraction of pixels seeding a flake
  int streak_length; // px
  double whitening;  // blend weight toward the brightened image
};
inline constexpr PerLevel<Snow> kSnow{{{0.02, 3, 0.1}, {0.04, 5, 0.2}, {0.06, 7, 0.3}}};

inline constexpr PerLevel<double> kFrostOpacity{0.3, 0.45, 0.6};

struct Rain {
  double drops_per_kilopixel;
  Range length_fraction;  // streak length as a fraction of image height
  double opacity;
};
inline constexpr PerLevel<Rain> kRain{{{4.0, {0.15, 0.3}, 0.5},
                                       {8.0, {0.2, 0.4}, 0.55},
                                       {12.0, {0.25, 0.5}, 0.6}}};
inline constexpr Range kRainAngle{-30.0, 30.0};
inline constexpr double kRainLevel = 200.0 / 255.0;

inline constexpr PerLevel<double> kShadowOpacity{0.3, 0.45, 0.6};
inline constexpr int kShadowMinVertices = 3;
inline constexpr int kShadowMaxVertices = 6;

// --- Camera -----------------------------------------------------------------
/// Contrast, Brightness, Sharpness and Color draw their factor from [1-d, 1+d].
inline constexpr PerLevel<double> kEnhanceDelta{0.2, 0.4, 0.6};
inline constexpr PerLevel<int> kJpegQuality{60, 40, 25};
inline constexpr PerLevel<int> kPixelateBlock{2, 3, 4};

// --- Process ----------------------------------------------------------------
inline constexpr PerLevel<int> kPosterizeBits{6, 4, 2};
inline constexpr PerLevel<int> kSolarizeThreshold{192, 128, 64};

}  // namespace textaug::severity
