// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace textaug {

/// Owned 8-bit pixel grid, row-major, channels interleaved (1 = gray, 3 = RGB).
class Image {
 public:
  Image() = default;

  /// Zero-filled image. Throws Error(kInvalidImage) on bad dimensions.
  Image(int width, int height, int channels);

  /// Takes ownership of `data`; its length must be width*height*channels.
  Image(int width, int height, int channels, std::vector<std::uint8_t> data);

  static Image filled(int width, int height, int channels, std::uint8_t value);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int channels() const noexcept { return channels_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  std::span<std::uint8_t> data() noexcept { return data_; }
  std::span<const std::uint8_t> data() const noexcept { return data_; }

  std::uint8_t& at(int x, int y, int c = 0) {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }
  std::uint8_t at(int x, int y, int c = 0) const {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }

  bool same_shape(const Image& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_ && channels_ == other.channels_;
  }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Throws Error(kInvalidImage) unless `img` satisfies the Image invariants.
void validate(const Image& img);

}  // namespace textaug
