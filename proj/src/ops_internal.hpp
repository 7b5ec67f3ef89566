// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "textaug/tps.hpp"
#include "workspace.hpp"

namespace textaug::detail {

FloatImage tps_apply(const FloatImage& img, const TpsMapping& backward, float fill);

}  // namespace textaug::detail
