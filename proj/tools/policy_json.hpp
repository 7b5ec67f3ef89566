// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Policy files:
//   {"schema": 1, "preset": "srn"}
//   {"schema": 1, "groups": [["Rotate", "Shrink"], ["Fog"]], "N": 2,
//    "prob": 0.5, "mag": "random" | 0 | 1 | 2}
// "N", "prob" and "mag" are optional (3, 0.5, "random").

#include <string>

#include "json.hpp"
#include "textaug/policy.hpp"

namespace textaug::cli {

struct PolicySpec {
  PolicyConfig config;
  /// Recorded in the manifest; a bare preset reference stays a reference.
  nlohmann::json json;
};

/// Throws Error(kInvalidPolicy / kUnknownPreset).
PolicySpec policy_from_json(const nlohmann::json& j);

/// `arg` is a preset name or a path to a policy file.
PolicySpec resolve_policy(const std::string& arg);

nlohmann::json to_json(const PolicyConfig& cfg);

}  // namespace textaug::cli
