// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

// Compiled with -mavx2. Nothing here may be inline-shared with other
// translation units; helpers live in the anonymous namespace.

#include <immintrin.h>

#include <cmath>

#include "textaug/simd/kernels.hpp"

namespace textaug::simd {
namespace {

constexpr int kLanes = 8;

inline int clamp_index(int v, int hi) { return v < 0 ? 0 : (v > hi ? hi : v); }

void to_unit(const std::uint8_t* src, float* dst, std::size_t n) {
  const __m256 div = _mm256_set1_ps(255.0f);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m128i bytes = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(src + i));
    const __m256 v = _mm256_cvtepi32_ps(_mm256_cvtepu8_epi32(bytes));
    _mm256_storeu_ps(dst + i, _mm256_div_ps(v, div));
  }
  for (; i < n; ++i) dst[i] = static_cast<float>(src[i]) / 255.0f;
}

void to_u8(const float* src, std::uint8_t* dst, std::size_t n) {
  const __m256 scale = _mm256_set1_ps(255.0f);
  const __m256 half = _mm256_set1_ps(0.5f);
  const __m256 zero = _mm256_setzero_ps();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256 v = _mm256_add_ps(_mm256_mul_ps(_mm256_loadu_ps(src + i), scale), half);
    v = _mm256_max_ps(v, zero);
    v = _mm256_min_ps(v, scale);
    const __m256i q = _mm256_cvttps_epi32(_mm256_floor_ps(v));
    // 8 x int32 in [0,255] -> 8 bytes.
    const __m128i lo = _mm256_castsi256_si128(q);
    const __m128i hi = _mm256_extracti128_si256(q, 1);
    const __m128i w16 = _mm_packus_epi32(lo, hi);
    const __m128i b8 = _mm_packus_epi16(w16, w16);
    _mm_storel_epi64(reinterpret_cast<__m128i*>(dst + i), b8);
  }
  for (; i < n; ++i) {
    float v = src[i] * 255.0f + 0.5f;
    v = v > 0.0f ? v : 0.0f;
    v = v < 255.0f ? v : 255.0f;
    dst[i] = static_cast<std::uint8_t>(std::floor(v));
  }
}

void scale_offset(float* data, std::size_t n, float scale, float offset) {
  const __m256 s = _mm256_set1_ps(scale);
  const __m256 o = _mm256_set1_ps(offset);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    _mm256_storeu_ps(data + i, _mm256_add_ps(_mm256_mul_ps(_mm256_loadu_ps(data + i), s), o));
  for (; i < n; ++i) data[i] = data[i] * scale + offset;
}

void lerp(float* dst, const float* src, std::size_t n, float alpha) {
  const float keep = 1.0f - alpha;
  const __m256 k = _mm256_set1_ps(keep);
  const __m256 a = _mm256_set1_ps(alpha);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256 d = _mm256_mul_ps(_mm256_loadu_ps(dst + i), k);
    const __m256 s = _mm256_mul_ps(_mm256_loadu_ps(src + i), a);
    _mm256_storeu_ps(dst + i, _mm256_add_ps(d, s));
  }
  for (; i < n; ++i) dst[i] = dst[i] * keep + src[i] * alpha;
}

void accumulate(float* dst, const float* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    _mm256_storeu_ps(dst + i, _mm256_add_ps(_mm256_loadu_ps(dst + i), _mm256_loadu_ps(src + i)));
  for (; i < n; ++i) dst[i] += src[i];
}

void convolve_rows(const float* src, float* dst, int width, int height, int channels,
                   const float* taps, int radius) {
  const std::size_t stride = static_cast<std::size_t>(width) * channels;
  // Elements whose whole tap window lies inside the row.
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
    if (inner_end <= inner_begin) {
      for (long i = 0; i < static_cast<long>(stride); ++i) edge(row, out, i);
      continue;
    }
    long i = 0;
    for (; i < inner_begin; ++i) edge(row, out, i);
    for (; i + kLanes <= inner_end; i += kLanes) {
      __m256 acc = _mm256_setzero_ps();
      const float* base = row + i - inner_begin;
      for (int k = 0; k < ntaps; ++k) {
        const __m256 v = _mm256_loadu_ps(base + static_cast<long>(k) * channels);
        acc = _mm256_add_ps(acc, _mm256_mul_ps(_mm256_set1_ps(taps[k]), v));
      }
      _mm256_storeu_ps(out + i, acc);
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
      __m256 acc = _mm256_setzero_ps();
      for (int k = 0; k < ntaps; ++k) {
        const float* row = src + clamp_index(y + k - radius, height - 1) * stride;
        acc = _mm256_add_ps(acc, _mm256_mul_ps(_mm256_set1_ps(taps[k]), _mm256_loadu_ps(row + i)));
      }
      _mm256_storeu_ps(out + i, acc);
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

  const float* rows[64];
  const bool small_kernel = kh <= 64;

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
    if (!small_kernel || inner_end <= inner_begin) {
      for (long i = 0; i < static_cast<long>(stride); ++i) edge(y, i);
      continue;
    }
    for (int ky = 0; ky < kh; ++ky) rows[ky] = src + clamp_index(y + ky - cy, height - 1) * stride;
    long i = 0;
    for (; i < inner_begin; ++i) edge(y, i);
    for (; i + kLanes <= inner_end; i += kLanes) {
      __m256 acc = _mm256_setzero_ps();
      for (int ky = 0; ky < kh; ++ky) {
        const float* base = rows[ky] + i - inner_begin;
        for (int kx = 0; kx < kw; ++kx) {
          const float w = kernel[ky * kw + kx];
          if (w == 0.0f) continue;
          const __m256 v = _mm256_loadu_ps(base + static_cast<long>(kx) * channels);
          acc = _mm256_add_ps(acc, _mm256_mul_ps(_mm256_set1_ps(w), v));
        }
      }
      _mm256_storeu_ps(dst + y * stride + i, acc);
    }
    for (; i < static_cast<long>(stride); ++i) edge(y, i);
  }
}

void remap_bilinear(const float* src, int src_w, int src_h, int channels, const float* map_x,
                    const float* map_y, float* dst, int dst_w, int dst_h, float fill) {
  const __m256 lo = _mm256_set1_ps(-2.0f);
  const __m256 hi_x = _mm256_set1_ps(static_cast<float>(src_w + 1));
  const __m256 hi_y = _mm256_set1_ps(static_cast<float>(src_h + 1));
  const __m256 one = _mm256_set1_ps(1.0f);
  const __m256 fillv = _mm256_set1_ps(fill);
  const __m256i zero_i = _mm256_setzero_si256();
  const __m256i one_i = _mm256_set1_epi32(1);
  const __m256i w_i = _mm256_set1_epi32(src_w);
  const __m256i h_i = _mm256_set1_epi32(src_h);
  const __m256i row_stride = _mm256_set1_epi32(src_w * channels);
  const __m256i ch_i = _mm256_set1_epi32(channels);

  // Lane mask for 0 <= v < limit.
  auto in_range = [&](__m256i v, __m256i limit) {
    const __m256i ge0 = _mm256_cmpgt_epi32(v, _mm256_sub_epi32(zero_i, one_i));
    const __m256i lt = _mm256_cmpgt_epi32(limit, v);
    return _mm256_and_si256(ge0, lt);
  };

  const std::size_t total = static_cast<std::size_t>(dst_w) * dst_h;
  alignas(32) float lane_out[kLanes];
  std::size_t p = 0;
  for (; p + kLanes <= total; p += kLanes) {
    __m256 sx = _mm256_loadu_ps(map_x + p);
    __m256 sy = _mm256_loadu_ps(map_y + p);
    sx = _mm256_min_ps(_mm256_max_ps(sx, lo), hi_x);
    sy = _mm256_min_ps(_mm256_max_ps(sy, lo), hi_y);
    const __m256 x0 = _mm256_floor_ps(sx);
    const __m256 y0 = _mm256_floor_ps(sy);
    const __m256 fx = _mm256_sub_ps(sx, x0);
    const __m256 fy = _mm256_sub_ps(sy, y0);
    const __m256 gx = _mm256_sub_ps(one, fx);
    const __m256 gy = _mm256_sub_ps(one, fy);
    const __m256i ix = _mm256_cvttps_epi32(x0);
    const __m256i iy = _mm256_cvttps_epi32(y0);
    const __m256i ix1 = _mm256_add_epi32(ix, one_i);
    const __m256i iy1 = _mm256_add_epi32(iy, one_i);

    const __m256i vx0 = in_range(ix, w_i);
    const __m256i vx1 = in_range(ix1, w_i);
    const __m256i vy0 = in_range(iy, h_i);
    const __m256i vy1 = in_range(iy1, h_i);
    const __m256i m00 = _mm256_and_si256(vx0, vy0);
    const __m256i m01 = _mm256_and_si256(vx1, vy0);
    const __m256i m10 = _mm256_and_si256(vx0, vy1);
    const __m256i m11 = _mm256_and_si256(vx1, vy1);

    const __m256i base0 = _mm256_add_epi32(_mm256_mullo_epi32(iy, row_stride),
                                           _mm256_mullo_epi32(ix, ch_i));
    const __m256i base1 = _mm256_add_epi32(base0, row_stride);

    for (int c = 0; c < channels; ++c) {
      const __m256i off = _mm256_set1_epi32(c);
      const __m256i i00 = _mm256_add_epi32(base0, off);
      const __m256i i01 = _mm256_add_epi32(i00, ch_i);
      const __m256i i10 = _mm256_add_epi32(base1, off);
      const __m256i i11 = _mm256_add_epi32(i10, ch_i);
      const __m256 v00 = _mm256_mask_i32gather_ps(fillv, src, i00, _mm256_castsi256_ps(m00), 4);
      const __m256 v01 = _mm256_mask_i32gather_ps(fillv, src, i01, _mm256_castsi256_ps(m01), 4);
      const __m256 v10 = _mm256_mask_i32gather_ps(fillv, src, i10, _mm256_castsi256_ps(m10), 4);
      const __m256 v11 = _mm256_mask_i32gather_ps(fillv, src, i11, _mm256_castsi256_ps(m11), 4);
      const __m256 top = _mm256_add_ps(_mm256_mul_ps(v00, gx), _mm256_mul_ps(v01, fx));
      const __m256 bot = _mm256_add_ps(_mm256_mul_ps(v10, gx), _mm256_mul_ps(v11, fx));
      const __m256 res = _mm256_add_ps(_mm256_mul_ps(top, gy), _mm256_mul_ps(bot, fy));
      if (channels == 1) {
        _mm256_storeu_ps(dst + p, res);
      } else {
        _mm256_store_ps(lane_out, res);
        for (int l = 0; l < kLanes; ++l) dst[(p + l) * channels + c] = lane_out[l];
      }
    }
  }

  // Tail, same arithmetic as the reference.
  auto sample = [&](int sx, int sy, int c) {
    if (sx < 0 || sx >= src_w || sy < 0 || sy >= src_h) return fill;
    return src[(static_cast<std::size_t>(sy) * src_w + sx) * channels + c];
  };
  const float flo = -2.0f;
  const float fhx = static_cast<float>(src_w + 1);
  const float fhy = static_cast<float>(src_h + 1);
  for (; p < total; ++p) {
    float sx = map_x[p];
    float sy = map_y[p];
    sx = sx > flo ? sx : flo;
    sx = sx < fhx ? sx : fhx;
    sy = sy > flo ? sy : flo;
    sy = sy < fhy ? sy : fhy;
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

constexpr KernelSet kAvx2{
    "avx2",        to_unit,       to_u8,       scale_offset, lerp, accumulate,
    convolve_rows, convolve_cols, convolve_2d, remap_bilinear,
};

}  // namespace

const KernelSet* avx2_kernels_unchecked() { return &kAvx2; }

}  // namespace textaug::simd
