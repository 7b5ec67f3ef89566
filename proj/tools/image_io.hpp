// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

#include "textaug/image.hpp"

namespace textaug::cli {

/// File-system or format failure; the CLI maps it to exit status 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

/// PNG or JPEG, detected from the signature. Alpha is dropped, palettes and
/// 16-bit samples are reduced to 8-bit gray or RGB.
Image decode_image(std::span<const std::uint8_t> bytes);
Image read_image(const std::filesystem::path& path);

/// Deterministic PNG encoding (fixed zlib level, no ancillary chunks).
std::vector<std::uint8_t> encode_png(const Image& img);
void write_png(const std::filesystem::path& path, const Image& img);

}  // namespace textaug::cli
