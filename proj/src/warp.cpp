// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include "textaug/warp.hpp"

#include <cmath>
#include <string>

#include "ops_internal.hpp"
#include "textaug/error.hpp"
#include "textaug/severity.hpp"

namespace textaug {

ControlPointSet curve_control_points(double s, double r, double t) {
  if (!(r >= s / 2.0))
    throw Error(ErrorCode::kInvalidRadius, "arc radius " + std::to_string(r) +
                                               " is below half the side " + std::to_string(s / 2));
  if (!(t > 0.0 && t < s))
    throw Error(ErrorCode::kInvalidRadius,
                "band thickness must lie in (0, side), got " + std::to_string(t));

  const double x1 = std::sqrt(r * r - s * s / 4.0);
  const double yc1 = r - x1;
  const double sin_b = std::sqrt(0.5 - x1 / (2.0 * r));
  const double cos_b = std::sqrt(0.5 + x1 / (2.0 * r));
  const double x2 = s / 2.0 - r * sin_b;
  const double y2 = r * (1.0 - cos_b);
  const double x3 = s / 2.0 - (r - t) * sin_b;
  const double y3 = r - (r - t) * cos_b;
  const double xc2 = s * t / (2.0 * r);
  const double yc2 = yc1 + t * x1 / r;

  ControlPointSet pts;
  pts.add({0, 0}, {0, yc1});
  pts.add({s / 4, 0}, {x2, y2});
  pts.add({3 * s / 4, 0}, {s - x2, y2});
  pts.add({s, 0}, {s, yc1});
  pts.add({s / 4, s}, {x3, y3});
  pts.add({3 * s / 4, s}, {s - x3, y3});
  pts.add({s / 2, 0}, {s / 2, 0});
  pts.add({s / 2, s}, {s / 2, t});
  pts.add({0, s}, {xc2, yc2});
  pts.add({s, s}, {s - xc2, yc2});
  return pts;
}

CurveParams sample_curve_params(Magnitude mag, Rng& rng) {
  CurveParams p{};
  p.flip = rng.coin();
  const auto r = severity::kCurveRadius[mag.level()];
  p.radius_factor = rng.uniform(r.lo, r.hi);
  p.thickness_factor = rng.uniform(severity::kCurveThickness.lo, severity::kCurveThickness.hi);
  return p;
}

Image curve_with(const Image& img, const CurveParams& params, std::uint8_t fill) {
  detail::require_min_size(img, 8, 8, "Curve");
  const int side = std::max(img.width(), img.height());
  const double s = side;
  const auto pts = curve_control_points(s, params.radius_factor * s, params.thickness_factor * s / 2);

  detail::FloatImage square = detail::resize_bilinear(detail::to_float(img), side, side);
  if (params.flip) detail::flip_vertical(square);
  const detail::FloatImage warped =
      detail::tps_apply(square, tps_fit(pts.swapped()), fill / 255.0f);

  // The lower half holds only fill.
  detail::FloatImage top(side, std::max(1, side / 2), img.channels());
  std::copy_n(warped.data.begin(), top.size(), top.data.begin());
  if (params.flip) detail::flip_vertical(top);
  return detail::to_image(detail::resize_bilinear(top, img.width(), img.height()));
}

Image curve(const Image& img, Magnitude mag, Rng& rng) {
  detail::require_min_size(img, 8, 8, "Curve");
  return curve_with(img, sample_curve_params(mag, rng));
}

ControlPointSet distort_points(double w, double h, double k, bool frozen_y,
                               const UniformSampler& rand) {
  const double tw = w / 3.0;
  const double hh = h / 2.0;
  ControlPointSet pts;
  auto add = [&](Point src, double dst_x, auto dst_y) {
    const double y = frozen_y ? src.y : dst_y();
    pts.add(src, {dst_x, y});
  };
  // Top edge.
  add({0, 0}, tw * rand(0, k), [&] { return hh * rand(0, k); });
  add({tw, 0}, tw * (1 + rand(-k, k)), [&] { return hh * rand(0, k); });
  add({2 * tw, 0}, tw * (2 + rand(-k, k)), [&] { return hh * rand(0, k); });
  add({w, 0}, w - tw * rand(0, k), [&] { return hh * rand(0, k); });
  // Bottom edge.
  add({0, h}, tw * rand(0, k), [&] { return h - hh * rand(0, k); });
  add({tw, h}, tw * (1 + rand(-k, k)), [&] { return h - hh * rand(0, k); });
  add({2 * tw, h}, tw * (2 + rand(-k, k)), [&] { return h - hh * rand(0, k); });
  add({w, h}, w - tw * rand(0, k), [&] { return h - hh * rand(0, k); });
  return pts;
}

namespace {

Image warp_edges(const Image& img, Magnitude mag, Rng& rng, bool frozen_y, const char* name) {
  detail::require_min_size(img, 8, 8, name);
  const double k = severity::kDistortExtent[mag.level()];
  const auto pts = distort_points(img.width(), img.height(), k, frozen_y, sampler_from(rng));
  return detail::to_image(
      detail::tps_apply(detail::to_float(img), tps_fit(pts.swapped()), detail::kFill));
}

}  // namespace

Image distort(const Image& img, Magnitude mag, Rng& rng) {
  return warp_edges(img, mag, rng, false, "Distort");
}

Image stretch(const Image& img, Magnitude mag, Rng& rng) {
  return warp_edges(img, mag, rng, true, "Stretch");
}

}  // namespace textaug
