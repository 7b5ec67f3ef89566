// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include "textaug/image.hpp"

#include <algorithm>
#include <string>

#include "textaug/error.hpp"

namespace textaug {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownOp: return "UnknownOp";
    case ErrorCode::kInvalidImage: return "InvalidImage";
    case ErrorCode::kInvalidProb: return "InvalidProb";
    case ErrorCode::kInvalidMagnitude: return "InvalidMagnitude";
    case ErrorCode::kDegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::kInvalidRadius: return "InvalidRadius";
    case ErrorCode::kImageTooSmall: return "ImageTooSmall";
    case ErrorCode::kInvalidPolicy: return "InvalidPolicy";
    case ErrorCode::kUnknownPreset: return "UnknownPreset";
    case ErrorCode::kCodecFailure: return "CodecFailure";
  }
  return "Unknown";
}

namespace {

void check_shape(int width, int height, int channels) {
  if (width < 1 || height < 1)
    throw Error(ErrorCode::kInvalidImage,
                "dimensions must be positive, got " + std::to_string(width) + "x" +
                    std::to_string(height));
  if (channels != 1 && channels != 3)
    throw Error(ErrorCode::kInvalidImage,
                "channels must be 1 or 3, got " + std::to_string(channels));
}

}  // namespace

Image::Image(int width, int height, int channels)
    : width_(width), height_(height), channels_(channels) {
  check_shape(width, height, channels);
  data_.assign(static_cast<std::size_t>(width) * height * channels, 0);
}

Image::Image(int width, int height, int channels, std::vector<std::uint8_t> data)
    : width_(width), height_(height), channels_(channels), data_(std::move(data)) {
  check_shape(width, height, channels);
  const std::size_t expected = static_cast<std::size_t>(width) * height * channels;
  if (data_.size() != expected)
    throw Error(ErrorCode::kInvalidImage, "buffer holds " + std::to_string(data_.size()) +
                                              " bytes, expected " + std::to_string(expected));
}

Image Image::filled(int width, int height, int channels, std::uint8_t value) {
  Image img(width, height, channels);
  std::fill(img.data_.begin(), img.data_.end(), value);
  return img;
}

void validate(const Image& img) {
  check_shape(img.width(), img.height(), img.channels());
  if (img.size() != static_cast<std::size_t>(img.width()) * img.height() * img.channels())
    throw Error(ErrorCode::kInvalidImage, "buffer length does not match dimensions");
}

}  // namespace textaug
