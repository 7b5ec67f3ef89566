// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "textaug/image.hpp"

namespace textaug {

/// Baseline JPEG (libjpeg, islow DCT, 4:2:0 for RGB). Throws kCodecFailure.
std::vector<std::uint8_t> jpeg_encode(const Image& img, int quality);
Image jpeg_decode(std::span<const std::uint8_t> bytes);

/// Version of the linked libjpeg, for recording next to golden outputs.
int jpeg_library_version();

}  // namespace textaug
