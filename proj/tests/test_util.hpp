// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "textaug/textaug.hpp"

namespace textaug::testing {

inline Image random_image(int w, int h, int c, std::uint64_t seed) {
  Image img(w, h, c);
  Rng rng(seed);
  for (auto& v : img.data()) v = static_cast<std::uint8_t>(rng.integer(0, 255));
  return img;
}

/// Dark horizontal band (rows [top, bottom)) on a light background.
inline Image stripe_image(int w, int h, int c, int top, int bottom) {
  Image img = Image::filled(w, h, c, 230);
  for (int y = top; y < bottom; ++y)
    for (int x = 0; x < w; ++x)
      for (int k = 0; k < c; ++k) img.at(x, y, k) = 20;
  return img;
}

/// Word-like strokes: light background, dark vertical bars with noise.
inline Image text_like(int w, int h, int c, std::uint64_t seed) {
  Image img = Image::filled(w, h, c, 220);
  Rng rng(seed);
  for (int x = 3; x < w - 3; ++x) {
    if ((x / 4) % 2 == 0) continue;
    for (int y = h / 4; y < h - h / 4; ++y)
      for (int k = 0; k < c; ++k) img.at(x, y, k) = static_cast<std::uint8_t>(30 + rng.integer(0, 30));
  }
  return img;
}

/// Irregular word-like image: random background tone, ink tone, stroke widths and
/// spacing, so no block size or period lines up with the strokes.
inline Image word_image(int w, int h, int c, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> ground(c), ink(c);
  for (int k = 0; k < c; ++k) {
    ground[k] = static_cast<int>(rng.integer(150, 250));
    ink[k] = static_cast<int>(rng.integer(0, 90));
  }
  Image img(w, h, c);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int k = 0; k < c; ++k) img.at(x, y, k) = static_cast<std::uint8_t>(ground[k]);
  const int top = static_cast<int>(rng.integer(h / 8, h / 4));
  const int bottom = h - static_cast<int>(rng.integer(h / 8, h / 4));
  for (int x = static_cast<int>(rng.integer(1, 6)); x < w - 2;) {
    const int stroke = static_cast<int>(rng.integer(1, 4));
    const int y0 = top + static_cast<int>(rng.integer(0, (bottom - top) / 3));
    const int y1 = bottom - static_cast<int>(rng.integer(0, (bottom - top) / 3));
    for (int xx = x; xx < std::min(w, x + stroke); ++xx)
      for (int y = y0; y < y1; ++y)
        for (int k = 0; k < c; ++k) img.at(xx, y, k) = static_cast<std::uint8_t>(ink[k]);
    if (rng.coin()) {
      const int bar = y0 + static_cast<int>(rng.integer(0, std::max(0, y1 - y0 - 2)));
      const int len = static_cast<int>(rng.integer(2, 7));
      for (int xx = x; xx < std::min(w, x + len); ++xx)
        for (int y = bar; y < std::min(h, bar + 2); ++y)
          for (int k = 0; k < c; ++k) img.at(xx, y, k) = static_cast<std::uint8_t>(ink[k]);
    }
    x += stroke + static_cast<int>(rng.integer(2, 9));
  }
  return img;
}

inline double mean_abs_diff(const Image& a, const Image& b) {
  const auto x = a.data();
  const auto y = b.data();
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::abs(int(x[i]) - int(y[i]));
  return s / static_cast<double>(x.size());
}

inline int max_abs_diff(const Image& a, const Image& b) {
  const auto x = a.data();
  const auto y = b.data();
  int m = 0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(int(x[i]) - int(y[i])));
  return m;
}

inline double mean(const Image& a) {
  double s = 0.0;
  for (auto v : a.data()) s += v;
  return s / static_cast<double>(a.size());
}

/// Intensity-weighted centroid row of darkness (255 - v) in column x.
inline double dark_centroid_row(const Image& img, int x) {
  double w = 0.0, s = 0.0;
  for (int y = 0; y < img.height(); ++y) {
    const double d = 255.0 - img.at(x, y, 0);
    w += d;
    s += d * (y + 0.5);
  }
  return w > 0 ? s / w : 0.0;
}

/// Samples the midpoint of every requested interval.
inline double midpoint(double lo, double hi) { return (lo + hi) / 2.0; }

}  // namespace textaug::testing
