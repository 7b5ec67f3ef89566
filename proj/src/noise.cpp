// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include "textaug/severity.hpp"
#include "textaug/signal.hpp"
#include "workspace.hpp"

namespace textaug {

double noise_parameter(NoiseKind kind, Magnitude mag) {
  const int l = mag.level();
  switch (kind) {
    case NoiseKind::kGaussian: return severity::kGaussianNoiseSigma[l];
    case NoiseKind::kShot: return severity::kShotNoisePhotons[l];
    case NoiseKind::kImpulse: return severity::kImpulseNoiseAmount[l];
    case NoiseKind::kSpeckle: return severity::kSpeckleNoiseSigma[l];
  }
  return 0.0;
}

Image noise_with(const Image& img, NoiseKind kind, double parameter, Rng& rng) {
  detail::FloatImage f = detail::to_float(img);
  switch (kind) {
    case NoiseKind::kGaussian:
      for (float& v : f.data) v = static_cast<float>(v + parameter * rng.gaussian());
      break;
    case NoiseKind::kShot:
      for (float& v : f.data)
        v = static_cast<float>(static_cast<double>(rng.poisson(v * parameter)) / parameter);
      break;
    case NoiseKind::kImpulse:
      for (float& v : f.data)
        if (rng.uniform() < parameter) v = rng.coin() ? 1.0f : 0.0f;
      break;
    case NoiseKind::kSpeckle:
      for (float& v : f.data) v = static_cast<float>(v + v * parameter * rng.gaussian());
      break;
  }
  return detail::to_image(f);  // saturates
}

Image noise(const Image& img, NoiseKind kind, Magnitude mag, Rng& rng) {
  return noise_with(img, kind, noise_parameter(kind, mag), rng);
}

}  // namespace textaug
