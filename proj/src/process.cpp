// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <array>

#include "textaug/camera.hpp"
#include "textaug/severity.hpp"
#include "workspace.hpp"

namespace textaug {

namespace {

template <class Fn>
Image map_samples(const Image& img, Fn&& fn) {
  Image out = img;
  for (auto& v : out.data()) v = fn(v);
  return out;
}

}  // namespace

Image posterize_with(const Image& img, int bits) {
  const auto mask = static_cast<std::uint8_t>(0xFFu << (8 - std::clamp(bits, 0, 8)));
  return map_samples(img, [mask](std::uint8_t v) { return static_cast<std::uint8_t>(v & mask); });
}

Image solarize_with(const Image& img, int threshold) {
  return map_samples(img, [threshold](std::uint8_t v) {
    return v >= threshold ? static_cast<std::uint8_t>(255 - v) : v;
  });
}

Image invert(const Image& img) {
  return map_samples(img, [](std::uint8_t v) { return static_cast<std::uint8_t>(255 - v); });
}

Image equalize(const Image& img) {
  Image out = img;
  const int c = img.channels();
  const auto src = img.data();
  auto dst = out.data();
  const std::size_t n = src.size() / c;
  for (int k = 0; k < c; ++k) {
    std::array<std::size_t, 256> hist{};
    for (std::size_t i = k; i < src.size(); i += c) ++hist[src[i]];
    std::size_t cdf_min = 0;
    for (auto h : hist)
      if (h != 0) { cdf_min = h; break; }
    if (cdf_min == n) continue;  // constant channel
    std::array<std::uint8_t, 256> lut{};
    std::size_t cdf = 0;
    for (int v = 0; v < 256; ++v) {
      cdf += hist[v];
      const std::size_t num = cdf > cdf_min ? (cdf - cdf_min) * 255 : 0;
      const std::size_t den = n - cdf_min;
      lut[v] = static_cast<std::uint8_t>((num + den / 2) / den);
    }
    for (std::size_t i = k; i < src.size(); i += c) dst[i] = lut[src[i]];
  }
  return out;
}

Image autocontrast(const Image& img) {
  Image out = img;
  const int c = img.channels();
  const auto src = img.data();
  auto dst = out.data();
  for (int k = 0; k < c; ++k) {
    int lo = 255, hi = 0;
    for (std::size_t i = k; i < src.size(); i += c) {
      lo = std::min<int>(lo, src[i]);
      hi = std::max<int>(hi, src[i]);
    }
    if (hi <= lo) continue;
    const int range = hi - lo;
    for (std::size_t i = k; i < src.size(); i += c)
      dst[i] = static_cast<std::uint8_t>(((src[i] - lo) * 255 + range / 2) / range);
  }
  return out;
}

Image sharpness_with(const Image& img, double factor) {
  static const std::vector<float> kSmooth = [] {
    std::vector<float> k(9, 1.0f / 13.0f);
    k[4] = 5.0f / 13.0f;
    return k;
  }();
  const detail::FloatImage f = detail::to_float(img);
  detail::FloatImage blurred = detail::convolve(f, kSmooth, 3, 3);
  // blur + factor * (x - blur) == lerp(blur, x, factor)
  detail::kernels().lerp(blurred.data.data(), f.data.data(), blurred.size(), static_cast<float>(factor));
  return detail::to_image(blurred);
}

Image color_with(const Image& img, double factor) {
  if (img.channels() != 3) return img;
  detail::FloatImage f = detail::to_float(img);
  const float k = static_cast<float>(factor);
  for (int y = 0; y < f.height; ++y)
    for (int x = 0; x < f.width; ++x) {
      const float gray = 0.299f * f.at(x, y, 0) + 0.587f * f.at(x, y, 1) + 0.114f * f.at(x, y, 2);
      for (int c = 0; c < 3; ++c) f.at(x, y, c) = gray + k * (f.at(x, y, c) - gray);
    }
  return detail::to_image(f);
}

Image process(const Image& img, ProcessKind kind, Magnitude mag, Rng& rng) {
  const int l = mag.level();
  switch (kind) {
    case ProcessKind::kPosterize: return posterize_with(img, severity::kPosterizeBits[l]);
    case ProcessKind::kSolarize: return solarize_with(img, severity::kSolarizeThreshold[l]);
    case ProcessKind::kInvert: return invert(img);
    case ProcessKind::kEqualize: return equalize(img);
    case ProcessKind::kAutoContrast: return autocontrast(img);
    case ProcessKind::kSharpness: return sharpness_with(img, sample_enhance_factor(mag, rng));
    case ProcessKind::kColor: return color_with(img, sample_enhance_factor(mag, rng));
  }
  return img;
}

}  // namespace textaug
