// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include "textaug/geometry.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "ops_internal.hpp"
#include "textaug/error.hpp"
#include "textaug/severity.hpp"

namespace textaug {

ControlPointSet perspective_points(double w, double h, double k, HorizonSide side,
                                   const UniformSampler& rand) {
  const double top = h * rand(k, k + 0.1);
  const double bottom = h * rand(0.9 - k, 1.0 - k);
  ControlPointSet pts;
  if (side == HorizonSide::kLeft) {
    pts.add({0, 0}, {0, top});
    pts.add({w, 0}, {w, 0});
    pts.add({0, h}, {0, bottom});
    pts.add({w, h}, {w, h});
  } else {
    pts.add({0, 0}, {0, 0});
    pts.add({w, 0}, {w, top});
    pts.add({0, h}, {0, h});
    pts.add({w, h}, {w, bottom});
  }
  return pts;
}

std::array<double, 9> homography(const ControlPointSet& pts) {
  if (pts.size() != 4)
    throw Error(ErrorCode::kDegenerateConfiguration, "homography needs exactly 4 point pairs");
  Eigen::Matrix<double, 8, 8> a;
  Eigen::Matrix<double, 8, 1> b;
  for (int i = 0; i < 4; ++i) {
    const Point s = pts.source()[i];
    const Point d = pts.destination()[i];
    a.row(2 * i) << s.x, s.y, 1, 0, 0, 0, -d.x * s.x, -d.x * s.y;
    a.row(2 * i + 1) << 0, 0, 0, s.x, s.y, 1, -d.y * s.x, -d.y * s.y;
    b(2 * i) = d.x;
    b(2 * i + 1) = d.y;
  }
  const Eigen::FullPivLU<Eigen::Matrix<double, 8, 8>> lu(a);
  if (!lu.isInvertible())
    throw Error(ErrorCode::kDegenerateConfiguration, "homography system is singular");
  const Eigen::Matrix<double, 8, 1> h = lu.solve(b);
  return {h(0), h(1), h(2), h(3), h(4), h(5), h(6), h(7), 1.0};
}

Point apply_homography(const std::array<double, 9>& h, Point p) {
  const double w = h[6] * p.x + h[7] * p.y + h[8];
  return {(h[0] * p.x + h[1] * p.y + h[2]) / w, (h[3] * p.x + h[4] * p.y + h[5]) / w};
}

Image perspective_with(const Image& img, const ControlPointSet& corners, std::uint8_t fill) {
  const auto backward = homography(corners.swapped());
  const detail::FloatImage src = detail::to_float(img);
  return detail::to_image(detail::warp_backward(
      src, img.width(), img.height(),
      [&](double u, double v) {
        const Point p = apply_homography(backward, {u, v});
        return std::pair{p.x, p.y};
      },
      fill / 255.0f));
}

Image perspective(const Image& img, Magnitude mag, Rng& rng) {
  detail::require_min_size(img, 4, 4, "Perspective");
  const HorizonSide side = rng.coin() ? HorizonSide::kRight : HorizonSide::kLeft;
  const double k = severity::kPerspectiveExtent[mag.level()];
  return perspective_with(img,
                          perspective_points(img.width(), img.height(), k, side, sampler_from(rng)));
}

ControlPointSet shrink_points(double w, double h, double dw, double dh) {
  ControlPointSet pts;
  pts.add({0, 0}, {dw, dh});
  pts.add({w, 0}, {w - dw, dh});
  pts.add({0, h}, {dw, h - dh});
  pts.add({w, h}, {w - dw, h - dh});
  return pts;
}

ShrinkParams sample_shrink_params(int width, int height, Magnitude mag, Rng& rng) {
  const double k = severity::kShrinkExtent[mag.level()];
  ShrinkParams p{};
  p.dw = width / 3.0 * rng.uniform(k, k + 0.1);
  p.dh = height / 2.0 * rng.uniform(k, k + 0.1);
  p.horizontal = rng.coin();
  const auto limit = static_cast<std::int64_t>(std::floor(p.horizontal ? p.dw : p.dh));
  p.offset = static_cast<int>(rng.integer(-limit, limit));
  return p;
}

Image shrink_with(const Image& img, const ShrinkParams& params, std::uint8_t fill) {
  const auto pts = shrink_points(img.width(), img.height(), params.dw, params.dh);
  const TpsMapping backward = tps_fit(pts.swapped());
  const double ox = params.horizontal ? params.offset : 0.0;
  const double oy = params.horizontal ? 0.0 : params.offset;
  const detail::FloatImage src = detail::to_float(img);
  return detail::to_image(detail::warp_backward(
      src, img.width(), img.height(),
      [&](double u, double v) {
        const Point p = backward({u - ox, v - oy});
        return std::pair{p.x, p.y};
      },
      fill / 255.0f));
}

Image shrink(const Image& img, Magnitude mag, Rng& rng) {
  detail::require_min_size(img, 4, 4, "Shrink");
  return shrink_with(img, sample_shrink_params(img.width(), img.height(), mag, rng));
}

double sample_rotate_angle(Magnitude mag, Rng& rng) {
  const auto range = severity::kRotateDegrees[mag.level()];
  const double theta = rng.uniform(range.lo, range.hi);
  return rng.coin() ? -theta : theta;
}

Point rotate_point(Point p, double width, double height, double degrees) {
  const double rad = degrees * std::numbers::pi / 180.0;
  const double c = std::cos(rad);
  const double s = std::sin(rad);
  const double cx = width / 2.0;
  const double cy = height / 2.0;
  const double dx = p.x - cx;
  const double dy = p.y - cy;
  // y grows downward, so this turns counter-clockwise on screen.
  return {cx + dx * c + dy * s, cy - dx * s + dy * c};
}

Image rotate_with(const Image& img, double degrees, std::uint8_t fill) {
  const double rad = degrees * std::numbers::pi / 180.0;
  const double c = std::cos(rad);
  const double s = std::sin(rad);
  const double cx = img.width() / 2.0;
  const double cy = img.height() / 2.0;
  const detail::FloatImage src = detail::to_float(img);
  return detail::to_image(detail::warp_backward(
      src, img.width(), img.height(),
      [&](double u, double v) {
        const double dx = u - cx;
        const double dy = v - cy;
        return std::pair{cx + dx * c - dy * s, cy + dx * s + dy * c};
      },
      fill / 255.0f));
}

Image rotate(const Image& img, Magnitude mag, Rng& rng) {
  return rotate_with(img, sample_rotate_angle(mag, rng));
}

}  // namespace textaug
