// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>

#include "textaug/image.hpp"

namespace textaug::cli {

inline constexpr int kPreviewColumns = 8;
inline constexpr int kPreviewPadding = 4;
inline constexpr int kPreviewLabelHeight = 11;

/// Contact sheet: the source, then every registered op at magnitude 2 with
/// prob 1, in registry order, each tile labeled with the op name. Each tile
/// has its own stream seeded from `seed` and the op name. Ops that reject
/// the input size leave a mid-gray tile.
Image make_preview(const Image& src, std::uint64_t seed);

/// Draws uppercase 5x7 glyphs (letters only; anything else is blank) with
/// the top-left corner at (x, y), clipped to the image.
void draw_label(Image& canvas, int x, int y, std::string_view text, std::uint8_t ink);

}  // namespace textaug::cli
