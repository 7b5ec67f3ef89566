// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Camera group (Contrast, Brightness, JpegCompression, Pixelate) and
// Process group (Posterize, Solarize, Invert, Equalize, AutoContrast,
// Sharpness, Color).

#include "textaug/image.hpp"
#include "textaug/registry.hpp"

namespace textaug {

enum class CameraKind { kContrast, kBrightness, kJpegCompression, kPixelate };
enum class ProcessKind { kPosterize, kSolarize, kInvert, kEqualize, kAutoContrast, kSharpness, kColor };

/// Uniform in [1 - d, 1 + d] with d from the severity table.
double sample_enhance_factor(Magnitude mag, Rng& rng);

/// mean + factor * (x - mean), mean over all samples.
Image contrast_with(const Image& img, double factor);
Image brightness_with(const Image& img, double factor);
/// Baseline JPEG round trip at `quality` (1..100). Throws kCodecFailure.
Image jpeg_with(const Image& img, int quality);
/// Box-average each block x block cell, then replicate it back.
Image pixelate_with(const Image& img, int block);

Image camera(const Image& img, CameraKind kind, Magnitude mag, Rng& rng);

/// Keeps the top `bits` bits of every sample; 8 is the identity.
Image posterize_with(const Image& img, int bits);
/// Inverts samples >= threshold; 256 is the identity.
Image solarize_with(const Image& img, int threshold);
Image invert(const Image& img);
/// Per channel: v -> round((cdf(v) - cdf_min) * 255 / (N - cdf_min)), where
/// cdf_min is the count of the darkest occupied level. Constant channels are
/// copied.
Image equalize(const Image& img);
/// Per channel linear stretch of [min, max] onto [0, 255], no cutoff.
Image autocontrast(const Image& img);
/// blur + factor * (x - blur) with the 3x3 smoothing kernel [1 1 1; 1 5 1; 1 1 1] / 13.
Image sharpness_with(const Image& img, double factor);
/// gray + factor * (x - gray), gray = 0.299 R + 0.587 G + 0.114 B. One-channel
/// images are returned unchanged.
Image color_with(const Image& img, double factor);

Image process(const Image& img, ProcessKind kind, Magnitude mag, Rng& rng);

}  // namespace textaug
