// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include "textaug/simd/kernels.hpp"

#include <cmath>

namespace textaug::simd {
namespace {

inline int clamp_index(int v, int hi) { return v < 0 ? 0 : (v > hi ? hi : v); }

void to_unit(const std::uint8_t* src, float* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<float>(src[i]) / 255.0f;
}

void to_u8(const float* src, std::uint8_t* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    float v = src[i] * 255.0f + 0.5f;
    v = v > 0.0f ? v : 0.0f;
    v = v < 255.0f ? v : 255.0f;
    dst[i] = static_cast<std::uint8_t>(std::floor(v));
  }
}

void scale_offset(float* data, std::size_t n, float scale, float offset) {
  for (std::size_t i = 0; i < n; ++i) data[i] = data[i] * scale + offset;
}

void lerp(float* dst, const float* src, std::size_t n, float alpha) {
  const float keep = 1.0f - alpha;
  for (std::size_t i = 0; i < n; ++i) dst[i] = dst[i] * keep + src[i] * alpha;
}

void accumulate(float* dst, const float* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] += src[i];
}

void convolve_rows(const float* src, float* dst, int width, int height, int channels,
                   const float* taps, int radius) {
  const std::size_t stride = static_cast<std::size_t>(width) * channels;
  for (int y = 0; y < height; ++y) {
    const float* row = src + y * stride;
    float* out = dst + y * stride;
    for (int x = 0; x < width; ++x) {
      for (int c = 0; c < channels; ++c) {
        float acc = 0.0f;
        for (int k = -radius; k <= radius; ++k)
          acc += taps[k + radius] * row[clamp_index(x + k, width - 1) * channels + c];
        out[x * channels + c] = acc;
      }
    }
  }
}

void convolve_cols(const float* src, float* dst, int width, int height, int channels,
                   const float* taps, int radius) {
  const std::size_t stride = static_cast<std::size_t>(width) * channels;
  for (int y = 0; y < height; ++y) {
    float* out = dst + y * stride;
    for (std::size_t i = 0; i < stride; ++i) {
      float acc = 0.0f;
      for (int k = -radius; k <= radius; ++k)
        acc += taps[k + radius] * src[clamp_index(y + k, height - 1) * stride + i];
      out[i] = acc;
    }
  }
}

void convolve_2d(const float* src, float* dst, int width, int height, int channels,
                 const float* kernel, int kw, int kh) {
  const std::size_t stride = static_cast<std::size_t>(width) * channels;
  const int cx = kw / 2;
  const int cy = kh / 2;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      for (int c = 0; c < channels; ++c) {
        float acc = 0.0f;
        for (int ky = 0; ky < kh; ++ky) {
          const float* row = src + clamp_index(y + ky - cy, height - 1) * stride;
          for (int kx = 0; kx < kw; ++kx) {
            const float w = kernel[ky * kw + kx];
            if (w == 0.0f) continue;
            acc += w * row[clamp_index(x + kx - cx, width - 1) * channels + c];
          }
        }
        dst[y * stride + x * channels + c] = acc;
      }
    }
  }
}

void remap_bilinear(const float* src, int src_w, int src_h, int channels, const float* map_x,
                    const float* map_y, float* dst, int dst_w, int dst_h, float fill) {
  const float lo = -2.0f;
  const float hi_x = static_cast<float>(src_w + 1);
  const float hi_y = static_cast<float>(src_h + 1);
  auto sample = [&](int ix, int iy, int c) {
    if (ix < 0 || ix >= src_w || iy < 0 || iy >= src_h) return fill;
    return src[(static_cast<std::size_t>(iy) * src_w + ix) * channels + c];
  };
  for (int y = 0; y < dst_h; ++y) {
    for (int x = 0; x < dst_w; ++x) {
      const std::size_t p = static_cast<std::size_t>(y) * dst_w + x;
      float sx = map_x[p];
      float sy = map_y[p];
      sx = sx > lo ? sx : lo;
      sx = sx < hi_x ? sx : hi_x;
      sy = sy > lo ? sy : lo;
      sy = sy < hi_y ? sy : hi_y;
      const float x0 = std::floor(sx);
      const float y0 = std::floor(sy);
      const float fx = sx - x0;
      const float fy = sy - y0;
      const float gx = 1.0f - fx;
      const float gy = 1.0f - fy;
      const int ix = static_cast<int>(x0);
      const int iy = static_cast<int>(y0);
      for (int c = 0; c < channels; ++c) {
        const float top = sample(ix, iy, c) * gx + sample(ix + 1, iy, c) * fx;
        const float bot = sample(ix, iy + 1, c) * gx + sample(ix + 1, iy + 1, c) * fx;
        dst[p * channels + c] = top * gy + bot * fy;
      }
    }
  }
}

constexpr KernelSet kScalar{
    "scalar",    to_unit,       to_u8,         scale_offset, lerp, accumulate,
    convolve_rows, convolve_cols, convolve_2d, remap_bilinear,
};

}  // namespace

const KernelSet& scalar_kernels() { return kScalar; }

}  // namespace textaug::simd
