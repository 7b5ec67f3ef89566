// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "json.hpp"

namespace textaug::cli {

struct BenchOptions {
  int width = 100;
  int height = 32;
  int channels = 1;
  int iterations = 1000;
  bool sweep = false;  // add an N-sweep table per preset
  std::uint64_t seed = 0;
};

/// Single-threaded throughput report:
///   {"width", "height", "channels", "iterations", "kernels",
///    "ops": [{"op", "group", "images_per_second", "seconds"}],
///    "op_sweep_seconds", "policies": [{"preset", "images_per_second", "seconds"}],
///    "sweep": {preset: [{"N", "mean_abs_change", "mean_applied", "images_per_second"}]}}
/// Every op runs at prob 1 with the magnitude cycling 0, 1, 2. Throws
/// Error(kInvalidImage) for sides below 8 or a channel count other than 1 or 3.
nlohmann::json run_bench(const BenchOptions& opts);

}  // namespace textaug::cli
