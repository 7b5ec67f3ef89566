// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>

namespace textaug {

/// xoshiro256** seeded through splitmix64. Every distribution below is
/// implemented here on top of next_u64(), so a seed fixes the same sequence
/// on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0);

  std::uint64_t next_u64();

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [lo, hi] (inclusive), unbiased.
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// Standard normal (Box-Muller, one variate per call).
  double gaussian();
  double gaussian(double mean, double stddev) { return mean + stddev * gaussian(); }
  /// Poisson with the given mean; multiplication method below 10, PTRS above.
  std::int64_t poisson(double mean);
  bool coin() { return (next_u64() >> 63) != 0; }

  std::uint64_t seed() const noexcept { return seed_; }
  /// Number of 64-bit words consumed since construction.
  std::uint64_t draws() const noexcept { return draws_; }

 private:
  std::array<std::uint64_t, 4> state_{};
  std::uint64_t seed_ = 0;
  std::uint64_t draws_ = 0;
};

/// 64-bit FNV-1a over raw bytes.
std::uint64_t fnv1a64(const void* data, std::size_t size);

}  // namespace textaug
