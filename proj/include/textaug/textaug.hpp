// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "textaug/camera.hpp"
#include "textaug/codec.hpp"
#include "textaug/error.hpp"
#include "textaug/geometry.hpp"
#include "textaug/image.hpp"
#include "textaug/pattern.hpp"
#include "textaug/policy.hpp"
#include "textaug/registry.hpp"
#include "textaug/rng.hpp"
#include "textaug/severity.hpp"
#include "textaug/signal.hpp"
#include "textaug/tps.hpp"
#include "textaug/warp.hpp"
#include "textaug/weather.hpp"
