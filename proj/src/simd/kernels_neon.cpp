// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

// AArch64 Advanced SIMD variants. Multiply and add stay separate
// instructions (no vmla/vfma) to match the scalar reference bit for bit.
// Bilinear remap has no NEON gather, so it reuses the scalar kernel.

#include <arm_neon.h>

#include <cmath>

#include "textaug/simd/kernels.hpp"

namespace textaug::simd {
namespace {

constexpr int kLanes = 4;

inline int clamp_index(int v, int hi) { return v < 0 ? 0 : (v > hi ? hi : v); }

void to_unit(const std::uint8_t* src, float* dst, std::size_t n) {
  const float32x4_t div = vdupq_n_f32(255.0f);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const uint16x8_t w = vmovl_u8(vld1_u8(src + i));
    const float32x4_t lo = vcvtq_f32_u32(vmovl_u16(vget_low_u16(w)));
    const float32x4_t hi = vcvtq_f32_u32(vmovl_u16(vget_high_u16(w)));
    vst1q_f32(dst + i, vdivq_f32(lo, div));
    vst1q_f32(dst + i + 4, vdivq_f32(hi, div));
  }
  for (; i < n; ++i) dst[i] = static_cast<float>(src[i]) / 255.0f;
}

void to_u8(const float* src, std::uint8_t* dst, std::size_t n) {
  const float32x4_t scale = vdupq_n_f32(255.0f);
  const float32x4_t half = vdupq_n_f32(0.5f);
  const float32x4_t zero = vdupq_n_f32(0.0f);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    float32x4_t v = vaddq_f32(vmulq_f32(vld1q_f32(src + i), scale), half);
    v = vminq_f32(vmaxq_f32(v, zero), scale);
    const uint32x4_t q = vcvtq_u32_f32(vrndmq_f32(v));
    const uint16x4_t q16 = vmovn_u32(q);
    const uint8x8_t q8 = vmovn_u16(vcombine_u16(q16, q16));
    alignas(8) std::uint8_t tmp[8];
    vst1_u8(tmp, q8);
    for (int l = 0; l < kLanes; ++l) dst[i + l] = tmp[l];
  }
  for (; i < n; ++i) {
    float v = src[i] * 255.0f + 0.5f;
    v = v > 0.0f ? v : 0.0f;
    v = v < 255.0f ? v : 255.0f;
    dst[i] = static_cast<std::uint8_t>(std::floor(v));
  }
}

void scale_offset(float* data, std::size_t n, float scale, float offset) {
  const float32x4_t s = vdupq_n_f32(scale);
  const float32x4_t o = vdupq_n_f32(offset);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    vst1q_f32(data + i, vaddq_f32(vmulq_f32(vld1q_f32(data + i), s), o));
  for (; i < n; ++i) data[i] = data[i] * scale + offset;
}

void lerp(float* dst, const float* src, std::size_t n, float alpha) {
  const float keep = 1.0f - alpha;
  const float32x4_t k = vdupq_n_f32(keep);
  const float32x4_t a = vdupq_n_f32(alpha);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    vst1q_f32(dst + i, vaddq_f32(vmulq_f32(vld1q_f32(dst + i), k), vmulq_f32(vld1q_f32(src + i), a)));
  for (; i < n; ++i) dst[i] = dst[i] * keep + src[i] * alpha;
}

void accumulate(float* dst, const float* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) vst1q_f32(dst + i, vaddq_f32(vld1q_f32(dst + i), vld1q_f32(src + i)));
  for (; i < n; ++i) dst[i] += src[i];
}

void convolve_rows(const float* src, float* dst, int width, int height, int channels,
                   const float* taps, int radius) {
  const std::size_t stride = static_cast<std::size_t>(width) * channels;
  const long inner_begin = static_cast<long>(radius) * channels;
  const long inner_end = static_cast<long>(width - radius) * channels;
  const int ntaps = 2 * radius + 1;
  auto edge = [&](const float* row, float* out, long i) {
    const int x = static_cast<int>(i / channels);
    const int c = static_cast<int>(i % channels);
    float acc = 0.0f;
    for (int k = -radius; k <= radius; ++k)
      acc += taps[k + radius] * row[clamp_index(x + k, width - 1) * channels + c];
    out[i] = acc;
  };
  for (int y = 0; y < height; ++y) {
    const float* row = src + y * stride;
    float* out = dst + y * stride;
    long i = 0;
    if (inner_end > inner_begin) {
      for (; i < inner_begin; ++i) edge(row, out, i);
      for (; i + kLanes <= inner_end; i += kLanes) {
        float32x4_t acc = vdupq_n_f32(0.0f);
        const float* base = row + i - inner_begin;
        for (int k = 0; k < ntaps; ++k)
          acc = vaddq_f32(acc, vmulq_f32(vdupq_n_f32(taps[k]), vld1q_f32(base + static_cast<long>(k) * channels)));
        vst1q_f32(out + i, acc);
      }
    }
    for (; i < static_cast<long>(stride); ++i) edge(row, out, i);
  }
}

void convolve_cols(const float* src, float* dst, int width, int height, int channels,
                   const float* taps, int radius) {
  const std::size_t stride = static_cast<std::size_t>(width) * channels;
  const int ntaps = 2 * radius + 1;
  for (int y = 0; y < height; ++y) {
    float* out = dst + y * stride;
    std::size_t i = 0;
    for (; i + kLanes <= stride; i += kLanes) {
      float32x4_t acc = vdupq_n_f32(0.0f);
      for (int k = 0; k < ntaps; ++k) {
        const float* row = src + clamp_index(y + k - radius, height - 1) * stride;
        acc = vaddq_f32(acc, vmulq_f32(vdupq_n_f32(taps[k]), vld1q_f32(row + i)));
      }
      vst1q_f32(out + i, acc);
    }
    for (; i < stride; ++i) {
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
  const long inner_begin = static_cast<long>(cx) * channels;
  const long inner_end = static_cast<long>(width - (kw - 1 - cx)) * channels;
  auto edge = [&](int y, long i) {
    const int x = static_cast<int>(i / channels);
    const int c = static_cast<int>(i % channels);
    float acc = 0.0f;
    for (int ky = 0; ky < kh; ++ky) {
      const float* row = src + clamp_index(y + ky - cy, height - 1) * stride;
      for (int kx = 0; kx < kw; ++kx) {
        const float w = kernel[ky * kw + kx];
        if (w == 0.0f) continue;
        acc += w * row[clamp_index(x + kx - cx, width - 1) * channels + c];
      }
    }
    dst[y * stride + i] = acc;
  };
  for (int y = 0; y < height; ++y) {
    long i = 0;
    if (inner_end > inner_begin) {
      for (; i < inner_begin; ++i) edge(y, i);
      for (; i + kLanes <= inner_end; i += kLanes) {
        float32x4_t acc = vdupq_n_f32(0.0f);
        for (int ky = 0; ky < kh; ++ky) {
          const float* base = src + clamp_index(y + ky - cy, height - 1) * stride + i - inner_begin;
          for (int kx = 0; kx < kw; ++kx) {
            const float w = kernel[ky * kw + kx];
            if (w == 0.0f) continue;
            acc = vaddq_f32(acc, vmulq_f32(vdupq_n_f32(w), vld1q_f32(base + static_cast<long>(kx) * channels)));
          }
        }
        vst1q_f32(dst + y * stride + i, acc);
      }
    }
    for (; i < static_cast<long>(stride); ++i) edge(y, i);
  }
}

}  // namespace

const KernelSet* neon_kernels_unchecked() {
  static const KernelSet set{
      "neon",        to_unit,       to_u8,       scale_offset, lerp, accumulate,
      convolve_rows, convolve_cols, convolve_2d, scalar_kernels().remap_bilinear,
  };
  return &set;
}

}  // namespace textaug::simd
