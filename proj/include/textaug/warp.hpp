// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Warp group: Curve, Distort, Stretch. All three are thin-plate-spline
// warps driven by closed-form control points.

#include "textaug/image.hpp"
#include "textaug/registry.hpp"
#include "textaug/sampler.hpp"
#include "textaug/tps.hpp"

namespace textaug {

/// The ten landmark pairs that bend an s x s square into an arc band of outer
/// radius r and thickness t: eight corner/quarter points plus the two edge
/// midpoints. Throws Error(kInvalidRadius) if r < s/2.
ControlPointSet curve_control_points(double side, double radius, double thickness);

struct CurveParams {
  double radius_factor;     // r = radius_factor * s
  double thickness_factor;  // t = thickness_factor * s / 2
  bool flip;                // bend the other way
};

/// Draw order: flip, radius, thickness.
CurveParams sample_curve_params(Magnitude mag, Rng& rng);

/// Resize to an s x s square (s = max(w, h)), optional vertical flip, TPS
/// warp, keep the upper half, undo the flip, resize back to w x h.
Image curve_with(const Image& img, const CurveParams& params, std::uint8_t fill = 128);

Image curve(const Image& img, Magnitude mag, Rng& rng);

/// Eight landmark pairs on the top and bottom edges at x = 0, w/3, 2w/3, w,
/// each pulled by a random fraction of k. With `frozen_y` every destination
/// keeps its source y. Draws x before y, in table order.
ControlPointSet distort_points(double width, double height, double extent, bool frozen_y,
                               const UniformSampler& rand);

Image distort(const Image& img, Magnitude mag, Rng& rng);
Image stretch(const Image& img, Magnitude mag, Rng& rng);

}  // namespace textaug
