// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Pattern group: line grids that hide thin slices of the image without
// removing whole symbols.

#include <cstdint>
#include <vector>

#include "textaug/image.hpp"
#include "textaug/registry.hpp"

namespace textaug {

enum class GridKind { kGrid, kVGrid, kHGrid, kRectGrid, kEllipseGrid };

struct GridSpec {
  GridKind kind;
  int gap;         // px between consecutive lines, strictly shrinking with magnitude
  int line_width;  // px
  int phase;       // offset of the first line, in [0, gap)
  std::uint8_t mask_value = 0;
};

/// Geometry for `kind` on a w x h image at `mag`, phase 0.
/// gap = max(h / (level + 2), 4 * line_width), line_width = max(1, h / 16).
GridSpec grid_spec(GridKind kind, int width, int height, Magnitude mag);

class Mask {
 public:
  Mask(int width, int height) : width_(width), height_(height), bits_(std::size_t(width) * height) {}

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool at(int x, int y) const { return bits_[std::size_t(y) * width_ + x] != 0; }
  void set(int x, int y, bool v = true) { bits_[std::size_t(y) * width_ + x] = v ? 1 : 0; }
  std::size_t count() const;
  double fraction() const { return static_cast<double>(count()) / bits_.size(); }

  friend bool operator==(const Mask&, const Mask&) = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> bits_;
};

Mask grid_mask(const GridSpec& spec, int width, int height);

/// Draws the phase uniformly from [0, gap). Throws kImageTooSmall below 8x8.
Mask grid_mask(GridKind kind, int width, int height, Magnitude mag, Rng& rng);

/// Masked pixels take `value` in every channel; the rest are copied.
Image apply_mask(const Image& img, const Mask& mask, std::uint8_t value);

Image apply_pattern(const Image& img, GridKind kind, Magnitude mag, Rng& rng);

}  // namespace textaug
