// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Thin-plate-spline interpolation over paired landmarks, and the image
// resampler built on it.
//
// Coordinates are continuous pixel coordinates: the image covers
// [0,width] x [0,height] and pixel (i,j) has its center at (i+0.5, j+0.5).

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "textaug/image.hpp"

namespace textaug {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Paired source/destination landmarks; both lists always have equal length.
class ControlPointSet {
 public:
  ControlPointSet() = default;
  ControlPointSet(std::vector<Point> source, std::vector<Point> destination);

  void add(Point source, Point destination);

  const std::vector<Point>& source() const noexcept { return source_; }
  const std::vector<Point>& destination() const noexcept { return destination_; }
  std::size_t size() const noexcept { return source_.size(); }

  /// Destination and source exchanged.
  ControlPointSet swapped() const { return {destination_, source_}; }

 private:
  std::vector<Point> source_;
  std::vector<Point> destination_;
};

/// f(p) = A * [1, x, y] + sum_i w_i * U(|p - anchor_i|), U(d) = d^2 log d^2, U(0) = 0.
class TpsMapping {
 public:
  TpsMapping(std::vector<Point> anchors, std::vector<Point> weights,
             std::array<Point, 3> affine);

  Point operator()(Point p) const;

  const std::vector<Point>& anchors() const noexcept { return anchors_; }
  /// One (wx, wy) pair per anchor.
  const std::vector<Point>& weights() const noexcept { return weights_; }
  /// Constant term, x coefficient, y coefficient; each holds the (x, y) outputs.
  const std::array<Point, 3>& affine() const noexcept { return affine_; }

  /// w_x^T K w_x + w_y^T K w_y; zero exactly when the mapping is affine.
  double bending_energy() const;

 private:
  std::vector<Point> anchors_;
  std::vector<Point> weights_;
  std::array<Point, 3> affine_;
};

/// Radial basis U(r^2) = r^2 log r^2 evaluated on the squared distance.
double tps_kernel(double squared_distance);

/// Fits the exact interpolant source -> destination with minimal bending energy.
/// Throws Error(kDegenerateConfiguration) for fewer than 3 points, duplicate
/// or collinear sources, or a singular system.
TpsMapping tps_fit(const ControlPointSet& points);

/// Pull-resamples `img`: output pixel p takes the bilinear sample of `img` at
/// backward(p). Samples outside the image take `fill`.
Image tps_apply(const Image& img, const TpsMapping& backward, std::uint8_t fill = 128);

/// Moves the content at each source landmark to its destination. Fits the
/// destination -> source mapping and pull-resamples with tps_apply.
Image tps_warp(const Image& img, const ControlPointSet& points, std::uint8_t fill = 128);

}  // namespace textaug
