// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <string_view>

#include "textaug/image.hpp"
#include "textaug/rng.hpp"

namespace textaug {

/// Severity level 0, 1 or 2.
class Magnitude {
 public:
  constexpr Magnitude() = default;
  /// Throws Error(kInvalidMagnitude) outside {0,1,2}.
  explicit Magnitude(int level);

  constexpr int level() const noexcept { return level_; }
  friend constexpr bool operator==(Magnitude, Magnitude) = default;

 private:
  int level_ = 0;
};

enum class Group { kWarp, kGeometry, kNoise, kBlur, kWeather, kCamera, kPattern, kProcess };

inline constexpr int kGroupCount = 8;

const char* to_string(Group group);

/// Every op shares this shape: output has the input's dimensions.
using OpFn = Image (*)(const Image& img, Magnitude mag, Rng& rng);

struct OpDescriptor {
  std::string_view name;
  Group group;
  int levels_supported;  // 1 or 3
  OpFn fn;
};

/// All registered ops: group order (Warp..Process), then name.
std::span<const OpDescriptor> registry_list();

/// nullptr if `name` is not registered.
const OpDescriptor* find_op(std::string_view name);

/// The op contract: draws one uniform u; returns the input unchanged when
/// u >= prob, otherwise the transformed image. Throws kUnknownOp,
/// kInvalidImage or kInvalidProb.
Image apply(std::string_view op_name, const Image& img, Magnitude mag, double prob, Rng& rng);

/// Same as apply(), reporting whether the op actually ran.
Image apply(std::string_view op_name, const Image& img, Magnitude mag, double prob, Rng& rng,
            bool& applied);

}  // namespace textaug
