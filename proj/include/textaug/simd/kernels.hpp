// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

// Data-parallel inner loops shared by the ops. Every ISA variant must produce
// results bitwise identical to the scalar reference: same operation order,
// no fused multiply-add, no approximations. The equivalence tests enforce it.
//
// Float buffers hold normalized intensities in [0,1], interleaved channels,
// row-major, exactly like Image.

namespace textaug::simd {

struct KernelSet {
  const char* name;

  /// dst[i] = src[i] / 255
  void (*to_unit)(const std::uint8_t* src, float* dst, std::size_t n);

  /// dst[i] = floor(clamp(src[i] * 255 + 0.5, 0, 255)); round-half-up, saturating.
  void (*to_u8)(const float* src, std::uint8_t* dst, std::size_t n);

  /// data[i] = data[i] * scale + offset
  void (*scale_offset)(float* data, std::size_t n, float scale, float offset);

  /// dst[i] = dst[i] * (1 - alpha) + src[i] * alpha
  void (*lerp)(float* dst, const float* src, std::size_t n, float alpha);

  /// dst[i] += src[i]
  void (*accumulate)(float* dst, const float* src, std::size_t n);

  /// Horizontal correlation with 2*radius+1 taps, clamp-to-edge.
  void (*convolve_rows)(const float* src, float* dst, int width, int height, int channels,
                        const float* taps, int radius);

  /// Vertical correlation with 2*radius+1 taps, clamp-to-edge.
  void (*convolve_cols)(const float* src, float* dst, int width, int height, int channels,
                        const float* taps, int radius);

  /// 2-D correlation, kernel kw x kh anchored at (kw/2, kh/2), clamp-to-edge.
  /// Zero taps are skipped; taps are accumulated row by row, left to right.
  void (*convolve_2d)(const float* src, float* dst, int width, int height, int channels,
                      const float* kernel, int kw, int kh);

  /// dst(x,y) = bilinear sample of src at (map_x, map_y), given in source
  /// pixel-index coordinates. Each of the four neighbours outside the source
  /// contributes `fill` instead. Coordinates are clamped to [-2, size+1].
  void (*remap_bilinear)(const float* src, int src_w, int src_h, int channels,
                         const float* map_x, const float* map_y, float* dst, int dst_w,
                         int dst_h, float fill);
};

const KernelSet& scalar_kernels();

/// nullptr unless compiled in and supported by the running CPU.
const KernelSet* avx2_kernels();
const KernelSet* neon_kernels();

/// Best available variant, chosen once per process. Setting the environment
/// variable TEXTAUG_ISA=scalar forces the reference kernels.
const KernelSet& active_kernels();

}  // namespace textaug::simd
