// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include "textaug/registry.hpp"

#include <array>
#include <string>

#include "textaug/camera.hpp"
#include "textaug/error.hpp"
#include "textaug/geometry.hpp"
#include "textaug/pattern.hpp"
#include "textaug/signal.hpp"
#include "textaug/warp.hpp"
#include "textaug/weather.hpp"

namespace textaug {

Magnitude::Magnitude(int level) : level_(level) {
  if (level < 0 || level > 2)
    throw Error(ErrorCode::kInvalidMagnitude,
                "magnitude must be 0, 1 or 2, got " + std::to_string(level));
}

const char* to_string(Group group) {
  switch (group) {
    case Group::kWarp: return "Warp";
    case Group::kGeometry: return "Geometry";
    case Group::kNoise: return "Noise";
    case Group::kBlur: return "Blur";
    case Group::kWeather: return "Weather";
    case Group::kCamera: return "Camera";
    case Group::kPattern: return "Pattern";
    case Group::kProcess: return "Process";
  }
  return "Unknown";
}

namespace {

// Group order, then name.
constexpr std::array<OpDescriptor, 36> kRegistry{{
    {"Curve", Group::kWarp, 3, curve},
    {"Distort", Group::kWarp, 3, distort},
    {"Stretch", Group::kWarp, 3, stretch},

    {"Perspective", Group::kGeometry, 3, perspective},
    {"Rotate", Group::kGeometry, 3, rotate},
    {"Shrink", Group::kGeometry, 3, shrink},

    {"GaussianNoise", Group::kNoise, 3,
     [](const Image& i, Magnitude m, Rng& r) { return noise(i, NoiseKind::kGaussian, m, r); }},
    {"ImpulseNoise", Group::kNoise, 3,
     [](const Image& i, Magnitude m, Rng& r) { return noise(i, NoiseKind::kImpulse, m, r); }},
    {"ShotNoise", Group::kNoise, 3,
     [](const Image& i, Magnitude m, Rng& r) { return noise(i, NoiseKind::kShot, m, r); }},
    {"SpeckleNoise", Group::kNoise, 3,
     [](const Image& i, Magnitude m, Rng& r) { return noise(i, NoiseKind::kSpeckle, m, r); }},

    {"DefocusBlur", Group::kBlur, 3,
     [](const Image& i, Magnitude m, Rng& r) { return blur(i, BlurKind::kDefocus, m, r); }},
    {"GaussianBlur", Group::kBlur, 3,
     [](const Image& i, Magnitude m, Rng& r) { return blur(i, BlurKind::kGaussian, m, r); }},
    {"GlassBlur", Group::kBlur, 3,
     [](const Image& i, Magnitude m, Rng& r) { return blur(i, BlurKind::kGlass, m, r); }},
    {"MotionBlur", Group::kBlur, 3,
     [](const Image& i, Magnitude m, Rng& r) { return blur(i, BlurKind::kMotion, m, r); }},
    {"ZoomBlur", Group::kBlur, 3,
     [](const Image& i, Magnitude m, Rng& r) { return blur(i, BlurKind::kZoom, m, r); }},

    {"Fog", Group::kWeather, 3, fog},
    {"Frost", Group::kWeather, 3, frost},
    {"Rain", Group::kWeather, 3, rain},
    {"Shadow", Group::kWeather, 3, shadow},
    {"Snow", Group::kWeather, 3, snow},

    {"Brightness", Group::kCamera, 3,
     [](const Image& i, Magnitude m, Rng& r) { return camera(i, CameraKind::kBrightness, m, r); }},
    {"Contrast", Group::kCamera, 3,
     [](const Image& i, Magnitude m, Rng& r) { return camera(i, CameraKind::kContrast, m, r); }},
    {"JpegCompression", Group::kCamera, 3,
     [](const Image& i, Magnitude m, Rng& r) {
       return camera(i, CameraKind::kJpegCompression, m, r);
     }},
    {"Pixelate", Group::kCamera, 3,
     [](const Image& i, Magnitude m, Rng& r) { return camera(i, CameraKind::kPixelate, m, r); }},

    {"EllipseGrid", Group::kPattern, 3,
     [](const Image& i, Magnitude m, Rng& r) {
       return apply_pattern(i, GridKind::kEllipseGrid, m, r);
     }},
    {"Grid", Group::kPattern, 3,
     [](const Image& i, Magnitude m, Rng& r) { return apply_pattern(i, GridKind::kGrid, m, r); }},
    {"HGrid", Group::kPattern, 3,
     [](const Image& i, Magnitude m, Rng& r) { return apply_pattern(i, GridKind::kHGrid, m, r); }},
    {"RectGrid", Group::kPattern, 3,
     [](const Image& i, Magnitude m, Rng& r) {
       return apply_pattern(i, GridKind::kRectGrid, m, r);
     }},
    {"VGrid", Group::kPattern, 3,
     [](const Image& i, Magnitude m, Rng& r) { return apply_pattern(i, GridKind::kVGrid, m, r); }},

    {"AutoContrast", Group::kProcess, 1,
     [](const Image& i, Magnitude m, Rng& r) { return process(i, ProcessKind::kAutoContrast, m, r); }},
    {"Color", Group::kProcess, 3,
     [](const Image& i, Magnitude m, Rng& r) { return process(i, ProcessKind::kColor, m, r); }},
    {"Equalize", Group::kProcess, 1,
     [](const Image& i, Magnitude m, Rng& r) { return process(i, ProcessKind::kEqualize, m, r); }},
    {"Invert", Group::kProcess, 1,
     [](const Image& i, Magnitude m, Rng& r) { return process(i, ProcessKind::kInvert, m, r); }},
    {"Posterize", Group::kProcess, 3,
     [](const Image& i, Magnitude m, Rng& r) { return process(i, ProcessKind::kPosterize, m, r); }},
    {"Sharpness", Group::kProcess, 3,
     [](const Image& i, Magnitude m, Rng& r) { return process(i, ProcessKind::kSharpness, m, r); }},
    {"Solarize", Group::kProcess, 3,
     [](const Image& i, Magnitude m, Rng& r) { return process(i, ProcessKind::kSolarize, m, r); }},
}};

}  // namespace

std::span<const OpDescriptor> registry_list() { return kRegistry; }

const OpDescriptor* find_op(std::string_view name) {
  for (const OpDescriptor& d : kRegistry)
    if (d.name == name) return &d;
  return nullptr;
}

Image apply(std::string_view op_name, const Image& img, Magnitude mag, double prob, Rng& rng,
            bool& applied) {
  const OpDescriptor* op = find_op(op_name);
  if (op == nullptr) throw Error(ErrorCode::kUnknownOp, std::string(op_name));
  validate(img);
  if (!(prob >= 0.0 && prob <= 1.0))
    throw Error(ErrorCode::kInvalidProb, "prob must lie in [0,1], got " + std::to_string(prob));
  // The gate always consumes exactly one draw, applied or not.
  applied = rng.uniform() < prob;
  if (!applied) return img;
  return op->fn(img, mag, rng);
}

Image apply(std::string_view op_name, const Image& img, Magnitude mag, double prob, Rng& rng) {
  bool applied = false;
  return apply(op_name, img, mag, prob, rng, applied);
}

}  // namespace textaug
