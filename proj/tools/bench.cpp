// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include "bench.hpp"

#include <chrono>
#include <cmath>

#include "textaug/error.hpp"
#include "textaug/policy.hpp"
#include "textaug/registry.hpp"
#include "textaug/rng.hpp"
#include "textaug/simd/kernels.hpp"

namespace textaug::cli {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Dark strokes on a light background, roughly like a cropped word.
Image synthetic_text(int w, int h, int c, Rng& rng) {
  Image img = Image::filled(w, h, c, 230);
  for (int x = 2; x < w - 2; ++x) {
    const bool ink_column = (x / 3) % 3 != 0;
    for (int y = h / 4; y < h - h / 4; ++y)
      if (ink_column && rng.uniform() < 0.7)
        for (int k = 0; k < c; ++k) img.at(x, y, k) = static_cast<std::uint8_t>(20 + rng.integer(0, 40));
  }
  return img;
}

}  // namespace

json run_bench(const BenchOptions& opts) {
  if (opts.width < 8 || opts.height < 8)
    throw Error(ErrorCode::kInvalidImage, "bench images need at least 8x8 pixels");
  if (opts.channels != 1 && opts.channels != 3)
    throw Error(ErrorCode::kInvalidImage, "bench channels must be 1 or 3");
  if (opts.iterations < 1) throw Error(ErrorCode::kInvalidImage, "bench iterations must be positive");

  Rng source_rng(opts.seed);
  const Image img = synthetic_text(opts.width, opts.height, opts.channels, source_rng);

  json report{{"width", opts.width},         {"height", opts.height},
              {"channels", opts.channels},   {"iterations", opts.iterations},
              {"kernels", simd::active_kernels().name}};

  json ops = json::array();
  double sweep_total = 0.0;
  for (const auto& op : registry_list()) {
    Rng rng(child_seed(opts.seed, op.name));
    const auto start = Clock::now();
    for (int i = 0; i < opts.iterations; ++i) {
      const Image out = apply(op.name, img, Magnitude(i % op.levels_supported), 1.0, rng);
      (void)out;
    }
    const double secs = seconds_since(start);
    sweep_total += secs;
    ops.push_back({{"op", op.name},
                   {"group", to_string(op.group)},
                   {"images_per_second", opts.iterations / std::max(secs, 1e-9)},
                   {"seconds", secs}});
  }
  report["ops"] = ops;
  report["op_sweep_seconds"] = sweep_total;

  json policies = json::array();
  for (const auto& name : preset_names()) {
    const PolicyConfig cfg = preset(name);
    Rng rng(child_seed(opts.seed, name));
    const auto start = Clock::now();
    for (int i = 0; i < opts.iterations; ++i) {
      const Image out = rand_augment(img, cfg, rng);
      (void)out;
    }
    const double secs = seconds_since(start);
    policies.push_back({{"preset", name},
                        {"images_per_second", opts.iterations / std::max(secs, 1e-9)},
                        {"seconds", secs}});
  }
  report["policies"] = policies;

  if (opts.sweep) {
    json sweep = json::object();
    for (const auto& name : preset_names()) {
      json rows = json::array();
      for (const auto& r : n_sweep(img, preset(name), opts.iterations, opts.seed))
        rows.push_back({{"N", r.n},
                        {"mean_abs_change", r.mean_abs_change},
                        {"mean_applied", r.mean_applied},
                        {"images_per_second", r.images_per_second}});
      sweep[name] = rows;
    }
    report["sweep"] = sweep;
  }
  return report;
}

}  // namespace textaug::cli
