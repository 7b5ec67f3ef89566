// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include "preview.hpp"

#include <array>
#include <cctype>

#include "textaug/error.hpp"
#include "textaug/policy.hpp"
#include "textaug/registry.hpp"
#include "textaug/rng.hpp"

namespace textaug::cli {

namespace {

// Rows top to bottom, bit 4 is the leftmost column.
constexpr std::array<std::array<std::uint8_t, 7>, 26> kGlyphs{{
    {0x0E, 0x11, 0x11, 0x1F, 0x11, 0x11, 0x11}, {0x1E, 0x11, 0x11, 0x1E, 0x11, 0x11, 0x1E},
    {0x0E, 0x11, 0x10, 0x10, 0x10, 0x11, 0x0E}, {0x1E, 0x11, 0x11, 0x11, 0x11, 0x11, 0x1E},
    {0x1F, 0x10, 0x10, 0x1E, 0x10, 0x10, 0x1F}, {0x1F, 0x10, 0x10, 0x1E, 0x10, 0x10, 0x10},
    {0x0E, 0x11, 0x10, 0x17, 0x11, 0x11, 0x0F}, {0x11, 0x11, 0x11, 0x1F, 0x11, 0x11, 0x11},
    {0x0E, 0x04, 0x04, 0x04, 0x04, 0x04, 0x0E}, {0x07, 0x02, 0x02, 0x02, 0x02, 0x12, 0x0C},
    {0x11, 0x12, 0x14, 0x18, 0x14, 0x12, 0x11}, {0x10, 0x10, 0x10, 0x10, 0x10, 0x10, 0x1F},
    {0x11, 0x1B, 0x15, 0x15, 0x11, 0x11, 0x11}, {0x11, 0x11, 0x19, 0x15, 0x13, 0x11, 0x11},
    {0x0E, 0x11, 0x11, 0x11, 0x11, 0x11, 0x0E}, {0x1E, 0x11, 0x11, 0x1E, 0x10, 0x10, 0x10},
    {0x0E, 0x11, 0x11, 0x11, 0x15, 0x12, 0x0D}, {0x1E, 0x11, 0x11, 0x1E, 0x14, 0x12, 0x11},
    {0x0F, 0x10, 0x10, 0x0E, 0x01, 0x01, 0x1E}, {0x1F, 0x04, 0x04, 0x04, 0x04, 0x04, 0x04},
    {0x11, 0x11, 0x11, 0x11, 0x11, 0x11, 0x0E}, {0x11, 0x11, 0x11, 0x11, 0x11, 0x0A, 0x04},
    {0x11, 0x11, 0x11, 0x15, 0x15, 0x15, 0x0A}, {0x11, 0x11, 0x0A, 0x04, 0x0A, 0x11, 0x11},
    {0x11, 0x11, 0x11, 0x0A, 0x04, 0x04, 0x04}, {0x1F, 0x01, 0x02, 0x04, 0x08, 0x10, 0x1F},
}};

void blit(Image& canvas, const Image& tile, int ox, int oy) {
  for (int y = 0; y < tile.height(); ++y)
    for (int x = 0; x < tile.width(); ++x)
      for (int c = 0; c < canvas.channels(); ++c)
        canvas.at(ox + x, oy + y, c) = tile.at(x, y, tile.channels() == 1 ? 0 : c);
}

}  // namespace

void draw_label(Image& canvas, int x, int y, std::string_view text, std::uint8_t ink) {
  for (char ch : text) {
    const int u = std::toupper(static_cast<unsigned char>(ch));
    if (u >= 'A' && u <= 'Z') {
      const auto& g = kGlyphs[u - 'A'];
      for (int r = 0; r < 7; ++r)
        for (int col = 0; col < 5; ++col) {
          const int px = x + col;
          const int py = y + r;
          if (((g[r] >> (4 - col)) & 1) == 0) continue;
          if (px < 0 || py < 0 || px >= canvas.width() || py >= canvas.height()) continue;
          for (int c = 0; c < canvas.channels(); ++c) canvas.at(px, py, c) = ink;
        }
    }
    x += 6;
  }
}

Image make_preview(const Image& src, std::uint64_t seed) {
  validate(src);
  const auto& ops = registry_list();
  const int tiles = static_cast<int>(ops.size()) + 1;
  const int rows = (tiles + kPreviewColumns - 1) / kPreviewColumns;
  const int cell_w = src.width() + kPreviewPadding;
  const int cell_h = src.height() + kPreviewLabelHeight + kPreviewPadding;
  Image sheet = Image::filled(kPreviewPadding + kPreviewColumns * cell_w, kPreviewPadding + rows * cell_h,
                              src.channels(), 255);

  auto place = [&](int index, const Image& tile, std::string_view label) {
    const int ox = kPreviewPadding + (index % kPreviewColumns) * cell_w;
    const int oy = kPreviewPadding + (index / kPreviewColumns) * cell_h;
    blit(sheet, tile, ox, oy);
    draw_label(sheet, ox, oy + src.height() + 2, label, 0);
  };

  place(0, src, "source");
  int index = 1;
  for (const auto& op : ops) {
    Rng rng(child_seed(seed, op.name));
    Image tile;
    try {
      tile = apply(op.name, src, Magnitude(2), 1.0, rng);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kImageTooSmall) throw;
      tile = Image::filled(src.width(), src.height(), src.channels(), 128);
    }
    place(index++, tile, op.name);
  }
  return sheet;
}

}  // namespace textaug::cli
