// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include "textaug/severity.hpp"
#include "textaug/signal.hpp"
#include "workspace.hpp"

namespace textaug {

std::vector<float> disk_kernel(int radius, double alias_sigma) {
  // Disk padded by one pixel so the 3x3 anti-aliasing pass has room.
  const int half = radius + 1;
  const int side = 2 * half + 1;
  std::vector<double> disk(std::size_t(side) * side, 0.0);
  for (int y = -half; y <= half; ++y)
    for (int x = -half; x <= half; ++x)
      if (x * x + y * y <= radius * radius) disk[std::size_t(y + half) * side + (x + half)] = 1.0;

  const double edge = alias_sigma > 0.0 ? std::exp(-1.0 / (2.0 * alias_sigma * alias_sigma)) : 0.0;
  const double taps[3] = {edge, 1.0, edge};
  std::vector<double> tmp(disk.size(), 0.0);
  std::vector<double> out(disk.size(), 0.0);
  for (int y = 0; y < side; ++y)
    for (int x = 0; x < side; ++x)
      for (int k = -1; k <= 1; ++k)
        if (x + k >= 0 && x + k < side) tmp[std::size_t(y) * side + x] += taps[k + 1] * disk[std::size_t(y) * side + x + k];
  for (int y = 0; y < side; ++y)
    for (int x = 0; x < side; ++x)
      for (int k = -1; k <= 1; ++k)
        if (y + k >= 0 && y + k < side) out[std::size_t(y) * side + x] += taps[k + 1] * tmp[std::size_t(y + k) * side + x];

  double sum = 0.0;
  for (double v : out) sum += v;
  std::vector<float> kernel(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) kernel[i] = static_cast<float>(out[i] / sum);
  return kernel;
}

std::vector<float> motion_kernel(int length, double angle_deg, double sigma, int& side) {
  auto [kernel, s] = detail::line_kernel(length, angle_deg, sigma);
  side = s;
  return kernel;
}

Image gaussian_blur_with(const Image& img, double sigma) {
  return detail::to_image(detail::gaussian_blur(detail::to_float(img), sigma));
}

Image defocus_blur_with(const Image& img, int radius, double alias_sigma) {
  const auto kernel = disk_kernel(radius, alias_sigma);
  const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(kernel.size()))));
  return detail::to_image(detail::convolve(detail::to_float(img), kernel, side, side));
}

Image motion_blur_with(const Image& img, int length, double angle_deg, double sigma) {
  int side = 0;
  const auto kernel = motion_kernel(length, angle_deg, sigma, side);
  return detail::to_image(detail::convolve(detail::to_float(img), kernel, side, side));
}

Image glass_blur_with(const Image& img, double sigma, int max_delta, int iterations, Rng& rng) {
  detail::FloatImage f = detail::gaussian_blur(detail::to_float(img), sigma);
  const int w = f.width;
  const int h = f.height;
  const int c = f.channels;
  // Walk bottom-right to top-left, swapping each pixel with a random
  // neighbour at offset [-d, d-1] on both axes.
  for (int it = 0; it < iterations; ++it) {
    for (int y = h - max_delta; y > max_delta; --y) {
      for (int x = w - max_delta; x > max_delta; --x) {
        const int dx = static_cast<int>(rng.integer(-max_delta, max_delta - 1));
        const int dy = static_cast<int>(rng.integer(-max_delta, max_delta - 1));
        const int yy = std::min(y, h - 1);
        const int xx = std::min(x, w - 1);
        for (int k = 0; k < c; ++k) std::swap(f.at(xx, yy, k), f.at(xx + dx, yy + dy, k));
      }
    }
  }
  return detail::to_image(detail::gaussian_blur(f, sigma));
}

Image zoom_blur_with(const Image& img, double zoom_max, int steps) {
  const detail::FloatImage src = detail::to_float(img);
  detail::FloatImage acc = src;
  const double cx = img.width() / 2.0;
  const double cy = img.height() / 2.0;
  const double max_u = img.width() - 0.5;
  const double max_v = img.height() - 0.5;
  for (int i = 1; i <= steps; ++i) {
    const double z = 1.0 + (zoom_max - 1.0) * i / steps;
    const detail::FloatImage zoomed = detail::warp_backward(
        src, img.width(), img.height(),
        [&](double u, double v) {
          return std::pair{std::clamp(cx + (u - cx) / z, 0.5, max_u),
                           std::clamp(cy + (v - cy) / z, 0.5, max_v)};
        },
        0.0f);
    detail::kernels().accumulate(acc.data.data(), zoomed.data.data(), acc.size());
  }
  detail::kernels().scale_offset(acc.data.data(), acc.size(), 1.0f / static_cast<float>(steps + 1),
                                 0.0f);
  return detail::to_image(acc);
}

Image blur(const Image& img, BlurKind kind, Magnitude mag, Rng& rng) {
  const int l = mag.level();
  switch (kind) {
    case BlurKind::kGaussian: return gaussian_blur_with(img, severity::kGaussianBlurSigma[l]);
    case BlurKind::kDefocus:
      return defocus_blur_with(img, severity::kDefocus[l].radius, severity::kDefocus[l].alias_sigma);
    case BlurKind::kMotion: {
      const double angle = rng.uniform(severity::kMotionAngle.lo, severity::kMotionAngle.hi);
      return motion_blur_with(img, severity::kMotion[l].length, angle, severity::kMotion[l].sigma);
    }
    case BlurKind::kGlass: {
      const auto g = severity::kGlass[l];
      return glass_blur_with(img, g.sigma, g.max_delta, g.iterations, rng);
    }
    case BlurKind::kZoom: return zoom_blur_with(img, severity::kZoomMax[l], severity::kZoomSteps);
  }
  return img;
}

}  // namespace textaug
