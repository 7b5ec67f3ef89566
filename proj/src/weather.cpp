// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include "textaug/weather.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "textaug/severity.hpp"
#include "workspace.hpp"

namespace textaug {

namespace {

void rescale_unit(std::vector<float>& v) {
  if (v.empty()) return;
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  const float mn = *lo;
  const float range = *hi - mn;
  for (float& x : v) x = range > 0.0f ? (x - mn) / range : 0.0f;
}

double cross(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double segment_distance(Point p, const RainStreak& s) {
  const double dx = s.to.x - s.from.x;
  const double dy = s.to.y - s.from.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((p.x - s.from.x) * dx + (p.y - s.from.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double ex = s.from.x + t * dx - p.x;
  const double ey = s.from.y + t * dy - p.y;
  return std::sqrt(ex * ex + ey * ey);
}

}  // namespace

std::vector<float> plasma_fractal(int width, int height, double roughness, Rng& rng) {
  int n = 2;
  while (n + 1 < std::max(width, height)) n *= 2;
  const int side = n + 1;
  std::vector<double> g(std::size_t(side) * side, 0.0);
  auto at = [&](int x, int y) -> double& { return g[std::size_t(y) * side + x]; };
  at(0, 0) = rng.uniform();
  at(n, 0) = rng.uniform();
  at(0, n) = rng.uniform();
  at(n, n) = rng.uniform();

  double amp = 1.0;
  for (int step = n; step > 1; step /= 2) {
    const int half = step / 2;
    for (int y = 0; y + step <= n; y += step)
      for (int x = 0; x + step <= n; x += step)
        at(x + half, y + half) =
            (at(x, y) + at(x + step, y) + at(x, y + step) + at(x + step, y + step)) / 4.0 +
            amp * rng.uniform(-0.5, 0.5);
    for (int y = 0; y <= n; y += half) {
      for (int x = (y / half) % 2 == 0 ? half : 0; x <= n; x += step) {
        double sum = 0.0;
        int cnt = 0;
        if (x >= half) sum += at(x - half, y), ++cnt;
        if (x + half <= n) sum += at(x + half, y), ++cnt;
        if (y >= half) sum += at(x, y - half), ++cnt;
        if (y + half <= n) sum += at(x, y + half), ++cnt;
        at(x, y) = sum / cnt + amp * rng.uniform(-0.5, 0.5);
      }
    }
    amp /= roughness;
  }

  std::vector<float> out(std::size_t(width) * height);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) out[std::size_t(y) * width + x] = static_cast<float>(at(x, y));
  rescale_unit(out);
  return out;
}

std::vector<float> frost_texture(int width, int height, Rng& rng) {
  std::vector<float> acc(std::size_t(width) * height, 0.0f);
  double weight = 1.0;
  for (int cell : {16, 8, 4}) {
    const int gw = width / cell + 2;
    const int gh = height / cell + 2;
    std::vector<double> lattice(std::size_t(gw) * gh);
    for (double& v : lattice) v = rng.uniform();
    for (int y = 0; y < height; ++y) {
      const double fy = (y + 0.5) / cell;
      const int y0 = static_cast<int>(fy);
      const double ty = fy - y0;
      for (int x = 0; x < width; ++x) {
        const double fx = (x + 0.5) / cell;
        const int x0 = static_cast<int>(fx);
        const double tx = fx - x0;
        auto l = [&](int xx, int yy) { return lattice[std::size_t(yy) * gw + xx]; };
        const double top = l(x0, y0) * (1.0 - tx) + l(x0 + 1, y0) * tx;
        const double bot = l(x0, y0 + 1) * (1.0 - tx) + l(x0 + 1, y0 + 1) * tx;
        const double v = top * (1.0 - ty) + bot * ty;
        // Ridges where the noise crosses its midpoint.
        const double ridge = 1.0 - std::fabs(2.0 * v - 1.0);
        acc[std::size_t(y) * width + x] += static_cast<float>(weight * std::pow(ridge, 4.0));
      }
    }
    weight *= 0.6;
  }
  rescale_unit(acc);
  return acc;
}

Image fog(const Image& img, Magnitude mag, Rng& rng) {
  const auto p = severity::kFog[mag.level()];
  const auto plasma = plasma_fractal(img.width(), img.height(), p.roughness, rng);
  detail::FloatImage f = detail::to_float(img);
  for (int y = 0; y < f.height; ++y)
    for (int x = 0; x < f.width; ++x) {
      const float a = static_cast<float>(p.opacity) * plasma[std::size_t(y) * f.width + x];
      for (int k = 0; k < f.channels; ++k) {
        float& v = f.at(x, y, k);
        v = v + a * (1.0f - v);
      }
    }
  return detail::to_image(f);
}

Image snow(const Image& img, Magnitude mag, Rng& rng) {
  const auto p = severity::kSnow[mag.level()];
  const double angle = rng.uniform(severity::kMotionAngle.lo, severity::kMotionAngle.hi);
  detail::FloatImage flakes(img.width(), img.height(), 1);
  for (float& v : flakes.data)
    if (rng.uniform() < p.density) v = 1.0f;
  const auto [kernel, side] = detail::line_kernel(p.streak_length, angle, p.streak_length / 2.0);
  const detail::FloatImage streaks = detail::convolve(flakes, kernel, side, side);

  // The normalized kernel spreads each flake; scale back so a streak core is white.
  const float gain = static_cast<float>(p.streak_length);
  const float beta = static_cast<float>(p.whitening);
  detail::FloatImage f = detail::to_float(img);
  for (int y = 0; y < f.height; ++y)
    for (int x = 0; x < f.width; ++x) {
      const float s = std::min(1.0f, gain * streaks.at(x, y));
      for (int k = 0; k < f.channels; ++k) {
        float& v = f.at(x, y, k);
        const float whitened = (1.0f - beta) * v + beta * (0.5f + 0.5f * v);
        v = std::max(whitened, s);
      }
    }
  return detail::to_image(f);
}

Image frost(const Image& img, Magnitude mag, Rng& rng) {
  const float alpha = static_cast<float>(severity::kFrostOpacity[mag.level()]);
  const auto tex = frost_texture(img.width(), img.height(), rng);
  detail::FloatImage f = detail::to_float(img);
  for (int y = 0; y < f.height; ++y)
    for (int x = 0; x < f.width; ++x) {
      const float t = tex[std::size_t(y) * f.width + x];
      for (int k = 0; k < f.channels; ++k) f.at(x, y, k) = (1 - alpha) * f.at(x, y, k) + alpha * t;
    }
  return detail::to_image(f);
}

RainParams sample_rain(int width, int height, Magnitude mag, Rng& rng) {
  const auto p = severity::kRain[mag.level()];
  const double angle = rng.uniform(severity::kRainAngle.lo, severity::kRainAngle.hi) * std::numbers::pi / 180.0;
  const auto count = std::lround(static_cast<double>(width) * height / 1000.0 * p.drops_per_kilopixel);
  RainParams params{{}, p.opacity};
  params.streaks.reserve(static_cast<std::size_t>(count));
  const double sx = std::sin(angle);
  const double sy = std::cos(angle);
  for (long i = 0; i < count; ++i) {
    const double x = rng.uniform(0.0, width);
    const double y = rng.uniform(0.0, height);
    const double len = rng.uniform(p.length_fraction.lo, p.length_fraction.hi) * height;
    params.streaks.push_back({{x, y}, {x + len * sx, y + len * sy}});
  }
  return params;
}

Image rain_with(const Image& img, const RainParams& params) {
  const int w = img.width();
  const int h = img.height();
  std::vector<float> cover(std::size_t(w) * h, 0.0f);
  for (const auto& s : params.streaks) {
    const int x0 = std::max(0, static_cast<int>(std::floor(std::min(s.from.x, s.to.x) - 1.0)));
    const int x1 = std::min(w - 1, static_cast<int>(std::ceil(std::max(s.from.x, s.to.x) + 1.0)));
    const int y0 = std::max(0, static_cast<int>(std::floor(std::min(s.from.y, s.to.y) - 1.0)));
    const int y1 = std::min(h - 1, static_cast<int>(std::ceil(std::max(s.from.y, s.to.y) + 1.0)));
    for (int y = y0; y <= y1; ++y)
      for (int x = x0; x <= x1; ++x) {
        const double c = 1.0 - segment_distance({x + 0.5, y + 0.5}, s);
        float& dst = cover[std::size_t(y) * w + x];
        if (c > dst) dst = static_cast<float>(c);
      }
  }
  detail::FloatImage f = detail::to_float(img);
  const float level = static_cast<float>(severity::kRainLevel);
  const float alpha = static_cast<float>(params.opacity);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const float a = cover[std::size_t(y) * w + x] * alpha;
      if (a <= 0.0f) continue;
      for (int k = 0; k < f.channels; ++k) {
        float& v = f.at(x, y, k);
        v = v + a * (level - v);
      }
    }
  return detail::to_image(f);
}

Image rain(const Image& img, Magnitude mag, Rng& rng) {
  return rain_with(img, sample_rain(img.width(), img.height(), mag, rng));
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool convex_polygon_contains(const std::vector<Point>& polygon, Point p) {
  if (polygon.size() < 3) return false;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point a = polygon[i];
    const Point b = polygon[(i + 1) % polygon.size()];
    if (cross(a, b, p) < 0.0) return false;
  }
  return true;
}

ShadowParams sample_shadow(int width, int height, Magnitude mag, Rng& rng) {
  // 0 left, 1 right, 2 top, 3 bottom.
  const auto half = rng.integer(0, 3);
  double x0 = 0.0, x1 = width, y0 = 0.0, y1 = height;
  switch (half) {
    case 0: x1 = width / 2.0; break;
    case 1: x0 = width / 2.0; break;
    case 2: y1 = height / 2.0; break;
    default: y0 = height / 2.0; break;
  }
  const auto n = rng.integer(severity::kShadowMinVertices, severity::kShadowMaxVertices);
  std::vector<Point> pts;
  for (std::int64_t i = 0; i < n; ++i) {
    const double x = rng.uniform(x0, x1);
    const double y = rng.uniform(y0, y1);
    pts.push_back({x, y});
  }
  return {convex_hull(std::move(pts)), severity::kShadowOpacity[mag.level()]};
}

Image shadow_with(const Image& img, const ShadowParams& params) {
  Image out = img;
  const double keep = 1.0 - params.opacity;
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x)
      if (convex_polygon_contains(params.polygon, {x + 0.5, y + 0.5}))
        for (int k = 0; k < img.channels(); ++k)
          out.at(x, y, k) = static_cast<std::uint8_t>(std::floor(img.at(x, y, k) * keep + 0.5));
  return out;
}

Image shadow(const Image& img, Magnitude mag, Rng& rng) {
  return shadow_with(img, sample_shadow(img.width(), img.height(), mag, rng));
}

Image weather(const Image& img, WeatherKind kind, Magnitude mag, Rng& rng) {
  switch (kind) {
    case WeatherKind::kFog: return fog(img, mag, rng);
    case WeatherKind::kSnow: return snow(img, mag, rng);
    case WeatherKind::kFrost: return frost(img, mag, rng);
    case WeatherKind::kRain: return rain(img, mag, rng);
    case WeatherKind::kShadow: return shadow(img, mag, rng);
  }
  return img;
}

}  // namespace textaug
