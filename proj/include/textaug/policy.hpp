// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// RandAugment-style composition: pick N distinct groups, one op from each,
// a magnitude per op, and run them through the apply() gate in pick order.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "textaug/image.hpp"
#include "textaug/registry.hpp"

namespace textaug {

struct PolicyConfig {
  std::vector<std::vector<std::string>> groups;
  int n = 3;
  /// Unset: each op draws its magnitude uniformly from {0,1,2}.
  std::optional<Magnitude> fixed_mag;
  double prob = 0.5;
};

/// Throws Error(kInvalidPolicy) unless 1 <= n <= groups.size(), no group is
/// empty, every name is registered and prob is in [0,1].
void validate(const PolicyConfig& cfg);

struct TraceEntry {
  std::string op;
  int mag;
  bool applied;
  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

/// `count` distinct indices from [0, group_count), uniformly, in draw order
/// (partial Fisher-Yates).
std::vector<int> select_groups(int group_count, int count, Rng& rng);

Image rand_augment(const Image& img, const PolicyConfig& cfg, Rng& rng,
                   std::vector<TraceEntry>* trace = nullptr);

/// "straug" (every group, N=3), "srn" or "ppocr". Throws kUnknownPreset.
PolicyConfig preset(std::string_view name);
std::vector<std::string> preset_names();

/// Per-image seed for batch work: master ^ FNV-1a(key).
std::uint64_t child_seed(std::uint64_t master, std::string_view key);

struct SweepRow {
  int n;
  double mean_abs_change;  // mean |out - in| per sample, intensity levels
  double mean_applied;     // ops that passed the gate, per image
  double images_per_second;
};

/// Runs `base` with N = 1..groups.size() over `images` seeds each.
std::vector<SweepRow> n_sweep(const Image& img, PolicyConfig base, int images, std::uint64_t seed);

}  // namespace textaug
