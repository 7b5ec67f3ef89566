// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include "workspace.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "textaug/error.hpp"

namespace textaug::detail {

FloatImage to_float(const Image& img) {
  FloatImage out(img.width(), img.height(), img.channels());
  kernels().to_unit(img.data().data(), out.data.data(), out.size());
  return out;
}

Image to_image(const FloatImage& img) {
  Image out(img.width, img.height, img.channels);
  kernels().to_u8(img.data.data(), out.data().data(), img.size());
  return out;
}

void require_min_size(const Image& img, int min_w, int min_h, const char* op) {
  if (img.width() < min_w || img.height() < min_h)
    throw Error(ErrorCode::kImageTooSmall, std::string(op) + " needs at least " +
                                               std::to_string(min_w) + "x" + std::to_string(min_h) +
                                               " pixels");
}

FloatImage resize_bilinear(const FloatImage& src, int width, int height) {
  const double sx = static_cast<double>(src.width) / width;
  const double sy = static_cast<double>(src.height) / height;
  const double max_u = src.width - 0.5;
  const double max_v = src.height - 0.5;
  return warp_backward(
      src, width, height,
      [&](double u, double v) {
        // Clamp to the outermost pixel centers so edges replicate instead of fading to fill.
        return std::pair{std::clamp(u * sx, 0.5, max_u), std::clamp(v * sy, 0.5, max_v)};
      },
      0.0f);
}

void flip_vertical(FloatImage& img) {
  const std::size_t stride = std::size_t(img.width) * img.channels;
  for (int top = 0, bottom = img.height - 1; top < bottom; ++top, --bottom)
    std::swap_ranges(img.data.begin() + top * stride, img.data.begin() + (top + 1) * stride,
                     img.data.begin() + bottom * stride);
}

std::vector<float> gaussian_taps(double sigma, int radius) {
  std::vector<double> w(2 * radius + 1);
  double sum = 0.0;
  for (int k = -radius; k <= radius; ++k) {
    w[k + radius] = std::exp(-(k * k) / (2.0 * sigma * sigma));
    sum += w[k + radius];
  }
  std::vector<float> taps(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) taps[i] = static_cast<float>(w[i] / sum);
  return taps;
}

FloatImage gaussian_blur(const FloatImage& src, double sigma) {
  if (sigma <= 0.0) return src;
  const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
  const auto taps = gaussian_taps(sigma, radius);
  FloatImage tmp(src.width, src.height, src.channels);
  FloatImage out(src.width, src.height, src.channels);
  kernels().convolve_rows(src.data.data(), tmp.data.data(), src.width, src.height, src.channels,
                          taps.data(), radius);
  kernels().convolve_cols(tmp.data.data(), out.data.data(), src.width, src.height, src.channels,
                          taps.data(), radius);
  return out;
}

FloatImage convolve(const FloatImage& src, const std::vector<float>& kernel, int kw, int kh) {
  FloatImage out(src.width, src.height, src.channels);
  kernels().convolve_2d(src.data.data(), out.data.data(), src.width, src.height, src.channels,
                        kernel.data(), kw, kh);
  return out;
}

std::pair<std::vector<float>, int> line_kernel(int length, double angle_deg, double sigma) {
  length = std::max(1, length);
  const int half = length / 2 + 1;
  const int side = 2 * half + 1;
  std::vector<double> k(std::size_t(side) * side, 0.0);
  const double rad = angle_deg * std::numbers::pi / 180.0;
  const double dx = std::cos(rad);
  const double dy = std::sin(rad);
  const double mid = (length - 1) / 2.0;
  double sum = 0.0;
  for (int j = 0; j < length; ++j) {
    const double t = j - mid;
    const int px = half + static_cast<int>(std::lround(t * dx));
    const int py = half + static_cast<int>(std::lround(t * dy));
    const double w = sigma > 0.0 ? std::exp(-(t * t) / (2.0 * sigma * sigma)) : 1.0;
    k[std::size_t(py) * side + px] += w;
    sum += w;
  }
  std::vector<float> out(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) out[i] = static_cast<float>(k[i] / sum);
  return {std::move(out), side};
}

}  // namespace textaug::detail
