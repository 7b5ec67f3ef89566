// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Geometry group: Perspective, Shrink, Rotate.

#include <array>

#include "textaug/image.hpp"
#include "textaug/registry.hpp"
#include "textaug/sampler.hpp"
#include "textaug/tps.hpp"

namespace textaug {

enum class HorizonSide { kLeft, kRight };

/// Corner correspondences; the horizon side's vertical edge is squeezed,
/// the opposite edge stays fixed.
ControlPointSet perspective_points(double width, double height, double extent, HorizonSide side,
                                   const UniformSampler& rand);

/// Row-major 3x3 homography (h22 = 1) taking each of the 4 sources to its
/// destination. Throws kDegenerateConfiguration if the system is singular.
std::array<double, 9> homography(const ControlPointSet& four_points);

Point apply_homography(const std::array<double, 9>& h, Point p);

/// Pull-resamples through the homography of `corners`.
Image perspective_with(const Image& img, const ControlPointSet& corners, std::uint8_t fill = 128);

/// Draw order: side coin, then the corner draws.
Image perspective(const Image& img, Magnitude mag, Rng& rng);

struct ShrinkParams {
  double dw;        // horizontal inset
  double dh;        // vertical inset
  bool horizontal;  // translation axis
  int offset;       // px along that axis, |offset| <= floor(dw or dh)
};

ControlPointSet shrink_points(double width, double height, double dw, double dh);
ShrinkParams sample_shrink_params(int width, int height, Magnitude mag, Rng& rng);
Image shrink_with(const Image& img, const ShrinkParams& params, std::uint8_t fill = 128);
Image shrink(const Image& img, Magnitude mag, Rng& rng);

/// Signed angle in degrees; positive turns the content counter-clockwise.
double sample_rotate_angle(Magnitude mag, Rng& rng);

/// Rotation about the image center, same output size, fill outside.
Image rotate_with(const Image& img, double degrees, std::uint8_t fill = 128);

/// Where rotate_with() sends the continuous point `p`.
Point rotate_point(Point p, double width, double height, double degrees);

Image rotate(const Image& img, Magnitude mag, Rng& rng);

}  // namespace textaug
