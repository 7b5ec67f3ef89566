// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Float workspace shared by the op implementations. Ops convert to
// normalized [0,1] floats once, work there, and quantize once at the end.

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "textaug/image.hpp"
#include "textaug/simd/kernels.hpp"

namespace textaug::detail {

/// Mid-gray used for pixels a geometric op pulls from outside the source.
inline constexpr std::uint8_t kFillLevel = 128;
inline constexpr float kFill = kFillLevel / 255.0f;

struct FloatImage {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<float> data;

  FloatImage() = default;
  FloatImage(int w, int h, int c) : width(w), height(h), channels(c), data(std::size_t(w) * h * c) {}

  std::size_t size() const { return data.size(); }
  float& at(int x, int y, int c = 0) { return data[(std::size_t(y) * width + x) * channels + c]; }
  float at(int x, int y, int c = 0) const { return data[(std::size_t(y) * width + x) * channels + c]; }
};

inline const simd::KernelSet& kernels() { return simd::active_kernels(); }

FloatImage to_float(const Image& img);
Image to_image(const FloatImage& img);

/// Throws Error(kImageTooSmall).
void require_min_size(const Image& img, int min_w, int min_h, const char* op);

/// Bilinear resize with half-pixel centers, edges clamped.
FloatImage resize_bilinear(const FloatImage& src, int width, int height);

void flip_vertical(FloatImage& img);

/// Backward warp: `fn(u, v)` maps an output point in continuous coordinates
/// (pixel centers at +0.5) to the continuous source point to sample.
template <class Fn>
FloatImage warp_backward(const FloatImage& src, int out_w, int out_h, Fn&& fn, float fill) {
  std::vector<float> map_x(std::size_t(out_w) * out_h);
  std::vector<float> map_y(map_x.size());
  std::size_t p = 0;
  for (int y = 0; y < out_h; ++y) {
    for (int x = 0; x < out_w; ++x, ++p) {
      const auto [su, sv] = fn(x + 0.5, y + 0.5);
      const double px = su - 0.5;
      const double py = sv - 0.5;
      // Non-finite or far-away points sample the fill.
      map_x[p] = std::isfinite(px) ? static_cast<float>(std::fmax(-4.0, std::fmin(px, src.width + 4.0))) : -4.0f;
      map_y[p] = std::isfinite(py) ? static_cast<float>(std::fmax(-4.0, std::fmin(py, src.height + 4.0))) : -4.0f;
    }
  }
  FloatImage out(out_w, out_h, src.channels);
  kernels().remap_bilinear(src.data.data(), src.width, src.height, src.channels, map_x.data(),
                           map_y.data(), out.data.data(), out_w, out_h, fill);
  return out;
}

/// Normalized 1-D Gaussian taps, length 2*radius+1.
std::vector<float> gaussian_taps(double sigma, int radius);

FloatImage gaussian_blur(const FloatImage& src, double sigma);

/// 2-D correlation with a kw x kh kernel (see KernelSet::convolve_2d).
FloatImage convolve(const FloatImage& src, const std::vector<float>& kernel, int kw, int kh);

/// Line kernel used for motion-style streaks: `length` samples along `angle_deg`,
/// Gaussian-weighted by distance from the center when sigma > 0, normalized to 1.
/// Returns the square kernel and its side.
std::pair<std::vector<float>, int> line_kernel(int length, double angle_deg, double sigma);

inline float clamp_unit(float v) { return v < 0.0f ? 0.0f : (v > 1.0f ? 1.0f : v); }

}  // namespace textaug::detail
