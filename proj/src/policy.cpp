// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include "textaug/policy.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <string>

#include "textaug/error.hpp"

namespace textaug {

void validate(const PolicyConfig& cfg) {
  if (cfg.groups.empty()) throw Error(ErrorCode::kInvalidPolicy, "policy has no groups");
  if (cfg.n < 1 || static_cast<std::size_t>(cfg.n) > cfg.groups.size())
    throw Error(ErrorCode::kInvalidPolicy,
                "N must lie in [1, " + std::to_string(cfg.groups.size()) + "], got " + std::to_string(cfg.n));
  if (!(cfg.prob >= 0.0 && cfg.prob <= 1.0))
    throw Error(ErrorCode::kInvalidPolicy, "prob must lie in [0,1]");
  for (const auto& g : cfg.groups) {
    if (g.empty()) throw Error(ErrorCode::kInvalidPolicy, "policy has an empty group");
    for (const auto& name : g)
      if (find_op(name) == nullptr) throw Error(ErrorCode::kInvalidPolicy, "unknown op in policy: " + name);
  }
}

std::vector<int> select_groups(int group_count, int count, Rng& rng) {
  std::vector<int> idx(static_cast<std::size_t>(group_count));
  for (int i = 0; i < group_count; ++i) idx[i] = i;
  for (int i = 0; i < count; ++i) std::swap(idx[i], idx[rng.integer(i, group_count - 1)]);
  idx.resize(static_cast<std::size_t>(count));
  return idx;
}

Image rand_augment(const Image& img, const PolicyConfig& cfg, Rng& rng, std::vector<TraceEntry>* trace) {
  validate(cfg);
  validate(img);
  const auto picks = select_groups(static_cast<int>(cfg.groups.size()), cfg.n, rng);
  Image out = img;
  for (int g : picks) {
    const auto& group = cfg.groups[g];
    const auto& name = group[rng.integer(0, static_cast<std::int64_t>(group.size()) - 1)];
    const Magnitude mag = cfg.fixed_mag ? *cfg.fixed_mag : Magnitude(static_cast<int>(rng.integer(0, 2)));
    bool applied = false;
    out = apply(name, out, mag, cfg.prob, rng, applied);
    if (trace) trace->push_back({name, mag.level(), applied});
  }
  return out;
}

PolicyConfig preset(std::string_view name) {
  PolicyConfig cfg;
  if (name == "straug") {
    cfg.groups.resize(kGroupCount);
    for (const auto& op : registry_list())
      cfg.groups[static_cast<int>(op.group)].emplace_back(op.name);
    cfg.n = 3;
  } else if (name == "srn" || name == "ppocr") {
    cfg.groups = {{"Rotate", "Perspective", "Shrink"}, {"GaussianNoise"}, {"MotionBlur"}};
    cfg.n = 3;
    if (name == "ppocr") {
      cfg.groups.push_back({"Distort"});
      cfg.n = 4;
    }
  } else {
    throw Error(ErrorCode::kUnknownPreset, std::string(name));
  }
  return cfg;
}

std::vector<std::string> preset_names() { return {"straug", "srn", "ppocr"}; }

std::uint64_t child_seed(std::uint64_t master, std::string_view key) {
  return master ^ fnv1a64(key.data(), key.size());
}

std::vector<SweepRow> n_sweep(const Image& img, PolicyConfig base, int images, std::uint64_t seed) {
  std::vector<SweepRow> rows;
  for (int n = 1; n <= static_cast<int>(base.groups.size()); ++n) {
    base.n = n;
    double change = 0.0;
    std::size_t samples = 0;
    std::size_t applied = 0;
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < images; ++i) {
      Rng rng(child_seed(seed, std::to_string(i)));
      std::vector<TraceEntry> trace;
      const Image out = rand_augment(img, base, rng, &trace);
      for (const auto& t : trace) applied += t.applied ? 1 : 0;
      if (!out.same_shape(img)) continue;
      const auto a = img.data();
      const auto b = out.data();
      for (std::size_t k = 0; k < a.size(); ++k) change += std::abs(int(a[k]) - int(b[k]));
      samples += a.size();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rows.push_back({n, samples ? change / static_cast<double>(samples) : 0.0,
                    images ? static_cast<double>(applied) / images : 0.0,
                    secs > 0.0 ? images / secs : 0.0});
  }
  return rows;
}

}  // namespace textaug
