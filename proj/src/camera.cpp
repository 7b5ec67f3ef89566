// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include "textaug/camera.hpp"

#include <algorithm>

#include "textaug/codec.hpp"
#include "textaug/error.hpp"
#include "textaug/severity.hpp"
#include "workspace.hpp"

namespace textaug {

double sample_enhance_factor(Magnitude mag, Rng& rng) {
  const double d = severity::kEnhanceDelta[mag.level()];
  return rng.uniform(1.0 - d, 1.0 + d);
}

Image contrast_with(const Image& img, double factor) {
  detail::FloatImage f = detail::to_float(img);
  double sum = 0.0;
  for (float v : f.data) sum += v;
  const float mean = static_cast<float>(sum / static_cast<double>(f.size()));
  const float k = static_cast<float>(factor);
  detail::kernels().scale_offset(f.data.data(), f.size(), k, mean - k * mean);
  return detail::to_image(f);
}

Image brightness_with(const Image& img, double factor) {
  detail::FloatImage f = detail::to_float(img);
  detail::kernels().scale_offset(f.data.data(), f.size(), static_cast<float>(factor), 0.0f);
  return detail::to_image(f);
}

Image jpeg_with(const Image& img, int quality) {
  const auto bytes = jpeg_encode(img, quality);
  return jpeg_decode(bytes);
}

Image pixelate_with(const Image& img, int block) {
  if (block < 1) throw Error(ErrorCode::kInvalidMagnitude, "pixelate block must be positive");
  Image out = img;
  const int w = img.width();
  const int h = img.height();
  const int c = img.channels();
  for (int by = 0; by < h; by += block)
    for (int bx = 0; bx < w; bx += block) {
      const int ex = std::min(w, bx + block);
      const int ey = std::min(h, by + block);
      const int n = (ex - bx) * (ey - by);
      for (int k = 0; k < c; ++k) {
        int sum = 0;
        for (int y = by; y < ey; ++y)
          for (int x = bx; x < ex; ++x) sum += img.at(x, y, k);
        const auto avg = static_cast<std::uint8_t>((sum + n / 2) / n);
        for (int y = by; y < ey; ++y)
          for (int x = bx; x < ex; ++x) out.at(x, y, k) = avg;
      }
    }
  return out;
}

Image camera(const Image& img, CameraKind kind, Magnitude mag, Rng& rng) {
  const int l = mag.level();
  switch (kind) {
    case CameraKind::kContrast: return contrast_with(img, sample_enhance_factor(mag, rng));
    case CameraKind::kBrightness: return brightness_with(img, sample_enhance_factor(mag, rng));
    case CameraKind::kJpegCompression: return jpeg_with(img, severity::kJpegQuality[l]);
    case CameraKind::kPixelate: return pixelate_with(img, severity::kPixelateBlock[l]);
  }
  return img;
}

}  // namespace textaug
