// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include "textaug/rng.hpp"

namespace textaug {

/// Source of rand(lo, hi) draws for the control-point formulas. Production
/// code wraps an Rng; tests pin draws to known values.
using UniformSampler = std::function<double(double lo, double hi)>;

inline UniformSampler sampler_from(Rng& rng) {
  return [&rng](double lo, double hi) { return rng.uniform(lo, hi); };
}

}  // namespace textaug
