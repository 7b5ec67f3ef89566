// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include "textaug/tps.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "ops_internal.hpp"
#include "textaug/error.hpp"
#include "workspace.hpp"

namespace textaug {

ControlPointSet::ControlPointSet(std::vector<Point> source, std::vector<Point> destination)
    : source_(std::move(source)), destination_(std::move(destination)) {
  if (source_.size() != destination_.size())
    throw Error(ErrorCode::kDegenerateConfiguration,
                "source and destination lists differ in length");
}

void ControlPointSet::add(Point source, Point destination) {
  source_.push_back(source);
  destination_.push_back(destination);
}

TpsMapping::TpsMapping(std::vector<Point> anchors, std::vector<Point> weights,
                       std::array<Point, 3> affine)
    : anchors_(std::move(anchors)), weights_(std::move(weights)), affine_(affine) {}

double tps_kernel(double squared_distance) {
  return squared_distance > 0.0 ? squared_distance * std::log(squared_distance) : 0.0;
}

Point TpsMapping::operator()(Point p) const {
  double fx = affine_[0].x + affine_[1].x * p.x + affine_[2].x * p.y;
  double fy = affine_[0].y + affine_[1].y * p.x + affine_[2].y * p.y;
  for (std::size_t i = 0; i < anchors_.size(); ++i) {
    const double dx = p.x - anchors_[i].x;
    const double dy = p.y - anchors_[i].y;
    const double u = tps_kernel(dx * dx + dy * dy);
    fx += weights_[i].x * u;
    fy += weights_[i].y * u;
  }
  return {fx, fy};
}

double TpsMapping::bending_energy() const {
  double energy = 0.0;
  for (std::size_t i = 0; i < anchors_.size(); ++i) {
    for (std::size_t j = 0; j < anchors_.size(); ++j) {
      const double dx = anchors_[i].x - anchors_[j].x;
      const double dy = anchors_[i].y - anchors_[j].y;
      const double k = tps_kernel(dx * dx + dy * dy);
      energy += k * (weights_[i].x * weights_[j].x + weights_[i].y * weights_[j].y);
    }
  }
  return energy;
}

namespace {

void check_configuration(const std::vector<Point>& pts) {
  if (pts.size() < 3)
    throw Error(ErrorCode::kDegenerateConfiguration,
                "need at least 3 control points, got " + std::to_string(pts.size()));
  double scale = 0.0;
  for (const Point& p : pts) scale = std::max({scale, std::fabs(p.x), std::fabs(p.y)});
  const double eps = 1e-9 * std::max(1.0, scale);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y) <= eps)
        throw Error(ErrorCode::kDegenerateConfiguration,
                    "control points " + std::to_string(i) + " and " + std::to_string(j) +
                        " coincide");
  // Collinear when every point lies on the line through p0 and the farthest point.
  std::size_t far = 1;
  double far_d = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double d = std::hypot(pts[i].x - pts[0].x, pts[i].y - pts[0].y);
    if (d > far_d) far_d = d, far = i;
  }
  const double ux = (pts[far].x - pts[0].x) / far_d;
  const double uy = (pts[far].y - pts[0].y) / far_d;
  double off_line = 0.0;
  for (const Point& p : pts)
    off_line = std::max(off_line, std::fabs(ux * (p.y - pts[0].y) - uy * (p.x - pts[0].x)));
  if (off_line <= eps)
    throw Error(ErrorCode::kDegenerateConfiguration, "control points are collinear");
}

}  // namespace

TpsMapping tps_fit(const ControlPointSet& points) {
  const auto& src = points.source();
  const auto& dst = points.destination();
  check_configuration(src);

  const int n = static_cast<int>(src.size());
  Eigen::MatrixXd system = Eigen::MatrixXd::Zero(n + 3, n + 3);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(n + 3, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double dx = src[i].x - src[j].x;
      const double dy = src[i].y - src[j].y;
      system(i, j) = tps_kernel(dx * dx + dy * dy);
    }
    system(i, n) = 1.0;
    system(i, n + 1) = src[i].x;
    system(i, n + 2) = src[i].y;
    system(n, i) = 1.0;
    system(n + 1, i) = src[i].x;
    system(n + 2, i) = src[i].y;
    rhs(i, 0) = dst[i].x;
    rhs(i, 1) = dst[i].y;
  }

  const Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
  if (!lu.isInvertible())
    throw Error(ErrorCode::kDegenerateConfiguration, "thin-plate system is singular");
  Eigen::MatrixXd sol = lu.solve(rhs);
  // One round of iterative refinement keeps control-point residuals near machine precision.
  sol += lu.solve(rhs - system * sol);

  std::vector<Point> weights(n);
  for (int i = 0; i < n; ++i) weights[i] = {sol(i, 0), sol(i, 1)};
  const std::array<Point, 3> affine{Point{sol(n, 0), sol(n, 1)}, Point{sol(n + 1, 0), sol(n + 1, 1)},
                                    Point{sol(n + 2, 0), sol(n + 2, 1)}};
  return TpsMapping(src, std::move(weights), affine);
}

namespace detail {

FloatImage tps_apply(const FloatImage& img, const TpsMapping& backward, float fill) {
  return warp_backward(
      img, img.width, img.height,
      [&](double u, double v) {
        const Point p = backward({u, v});
        return std::pair{p.x, p.y};
      },
      fill);
}

}  // namespace detail

Image tps_apply(const Image& img, const TpsMapping& backward, std::uint8_t fill) {
  validate(img);
  return detail::to_image(detail::tps_apply(detail::to_float(img), backward, fill / 255.0f));
}

Image tps_warp(const Image& img, const ControlPointSet& points, std::uint8_t fill) {
  return tps_apply(img, tps_fit(points.swapped()), fill);
}

}  // namespace textaug
