// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include "textaug/pattern.hpp"

#include <algorithm>
#include <cmath>

#include "textaug/error.hpp"
#include "workspace.hpp"

namespace textaug {

std::size_t Mask::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

namespace {

// Largest masked share of an axis of length n over all phases.
double worst_axis_fraction(int n, int gap, int line_width) {
  int worst = 0;
  for (int phase = 0; phase < gap; ++phase) {
    int covered = 0;
    for (int start = phase - gap; start < n; start += gap)
      covered += std::max(0, std::min(n, start + line_width) - std::max(0, start));
    worst = std::max(worst, covered);
  }
  return static_cast<double>(worst) / n;
}

}  // namespace

GridSpec grid_spec(GridKind kind, int width, int height, Magnitude mag) {
  GridSpec spec{};
  spec.kind = kind;
  // Lines cover at most a quarter of each period. On small or elongated
  // images the partial periods at the borders can push the union of both
  // line directions past half the image, so thin the lines until the densest
  // level stays below that for every phase.
  int lw = std::max(1, height / 16);
  while (lw > 1) {
    const int densest = std::max(height / 4, 4 * lw);
    const double fx = worst_axis_fraction(width, densest, lw);
    const double fy = worst_axis_fraction(height, densest, lw);
    if (1.0 - (1.0 - fx) * (1.0 - fy) < 0.5) break;
    --lw;
  }
  spec.line_width = lw;
  spec.gap = std::max(height / (mag.level() + 2), 4 * lw);
  spec.phase = 0;
  return spec;
}

namespace {

inline bool on_line(int pos, const GridSpec& spec) {
  int r = (pos - spec.phase) % spec.gap;
  if (r < 0) r += spec.gap;
  return r < spec.line_width;
}

inline bool on_ring(double pos, const GridSpec& spec) {
  double r = std::fmod(pos - spec.phase, static_cast<double>(spec.gap));
  if (r < 0) r += spec.gap;
  return r < spec.line_width;
}

}  // namespace

Mask grid_mask(const GridSpec& spec, int width, int height) {
  Mask mask(width, height);
  const double cx = width / 2.0;
  const double cy = height / 2.0;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      bool m = false;
      switch (spec.kind) {
        case GridKind::kVGrid: m = on_line(x, spec); break;
        case GridKind::kHGrid: m = on_line(y, spec); break;
        case GridKind::kGrid: m = on_line(x, spec) || on_line(y, spec); break;
        case GridKind::kRectGrid: {
          const int inset = std::min({x, width - 1 - x, y, height - 1 - y});
          m = on_line(inset, spec);
          break;
        }
        case GridKind::kEllipseGrid: {
          // Radius in vertical pixels of the ellipse through this pixel.
          const double nx = (x + 0.5 - cx) / cx;
          const double ny = (y + 0.5 - cy) / cy;
          m = on_ring(std::sqrt(nx * nx + ny * ny) * cy, spec);
          break;
        }
      }
      if (m) mask.set(x, y);
    }
  }
  return mask;
}

Mask grid_mask(GridKind kind, int width, int height, Magnitude mag, Rng& rng) {
  if (width < 8 || height < 8)
    throw Error(ErrorCode::kImageTooSmall, "grid patterns need at least 8x8 pixels");
  GridSpec spec = grid_spec(kind, width, height, mag);
  spec.phase = static_cast<int>(rng.integer(0, spec.gap - 1));
  return grid_mask(spec, width, height);
}

Image apply_mask(const Image& img, const Mask& mask, std::uint8_t value) {
  Image out = img;
  const int c = img.channels();
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x)
      if (mask.at(x, y))
        for (int k = 0; k < c; ++k) out.at(x, y, k) = value;
  return out;
}

Image apply_pattern(const Image& img, GridKind kind, Magnitude mag, Rng& rng) {
  const Mask mask = grid_mask(kind, img.width(), img.height(), mag, rng);
  return apply_mask(img, mask, grid_spec(kind, img.width(), img.height(), mag).mask_value);
}

}  // namespace textaug
