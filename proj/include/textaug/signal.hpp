// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Noise and Blur groups.

#include <vector>

#include "textaug/image.hpp"
#include "textaug/registry.hpp"

namespace textaug {

enum class NoiseKind { kGaussian, kShot, kImpulse, kSpeckle };
enum class BlurKind { kGaussian, kDefocus, kMotion, kGlass, kZoom };

/// sigma (Gaussian, Speckle), photon scale (Shot) or corrupted fraction (Impulse).
double noise_parameter(NoiseKind kind, Magnitude mag);

/// Corrupts every channel sample independently in normalized space:
///   Gaussian  x + N(0, sigma)
///   Shot      Poisson(x * lambda) / lambda
///   Impulse   with probability p, 0 or 1 (fair coin)
///   Speckle   x + x * N(0, sigma)
Image noise_with(const Image& img, NoiseKind kind, double parameter, Rng& rng);
Image noise(const Image& img, NoiseKind kind, Magnitude mag, Rng& rng);

/// Normalized disk of `radius`, smoothed by a 3x3 Gaussian of `alias_sigma`.
/// Returns the square kernel; its side is sqrt(size).
std::vector<float> disk_kernel(int radius, double alias_sigma);

/// Normalized line of `length` samples at `angle_deg`, Gaussian-weighted by
/// distance from its center. Sets `side` to the kernel side.
std::vector<float> motion_kernel(int length, double angle_deg, double sigma, int& side);

Image gaussian_blur_with(const Image& img, double sigma);
Image defocus_blur_with(const Image& img, int radius, double alias_sigma);
Image motion_blur_with(const Image& img, int length, double angle_deg, double sigma);
Image glass_blur_with(const Image& img, double sigma, int max_delta, int iterations, Rng& rng);
Image zoom_blur_with(const Image& img, double zoom_max, int steps);

Image blur(const Image& img, BlurKind kind, Magnitude mag, Rng& rng);

}  // namespace textaug
