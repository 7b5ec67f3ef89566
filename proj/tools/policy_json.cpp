// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include "policy_json.hpp"

#include <filesystem>
#include <fstream>

#include "image_io.hpp"
#include "textaug/error.hpp"

namespace textaug::cli {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kInvalidPolicy, what); }

}  // namespace

PolicySpec policy_from_json(const json& j) {
  if (!j.is_object()) bad("policy must be a JSON object");
  if (!j.contains("schema") || j["schema"] != 1) bad("policy needs \"schema\": 1");
  PolicySpec spec;
  if (j.contains("preset")) {
    if (!j["preset"].is_string()) bad("\"preset\" must be a string");
    spec.config = preset(j["preset"].get<std::string>());
    spec.json = {{"schema", 1}, {"preset", j["preset"]}};
    return spec;
  }
  if (!j.contains("groups") || !j["groups"].is_array()) bad("policy needs \"preset\" or \"groups\"");
  PolicyConfig& cfg = spec.config;
  for (const auto& g : j["groups"]) {
    if (!g.is_array()) bad("each group must be an array of op names");
    auto& group = cfg.groups.emplace_back();
    for (const auto& name : g) {
      if (!name.is_string()) bad("op names must be strings");
      group.push_back(name.get<std::string>());
    }
  }
  if (j.contains("N")) {
    if (!j["N"].is_number_integer()) bad("\"N\" must be an integer");
    cfg.n = j["N"].get<int>();
  }
  if (j.contains("prob")) {
    if (!j["prob"].is_number()) bad("\"prob\" must be a number");
    cfg.prob = j["prob"].get<double>();
  }
  if (j.contains("mag")) {
    const auto& m = j["mag"];
    if (m.is_string() && m == "random") {
      cfg.fixed_mag.reset();
    } else if (m.is_number_integer() && m.get<int>() >= 0 && m.get<int>() <= 2) {
      cfg.fixed_mag = Magnitude(m.get<int>());
    } else {
      bad("\"mag\" must be \"random\", 0, 1 or 2");
    }
  }
  validate(cfg);
  spec.json = to_json(cfg);
  return spec;
}

PolicySpec resolve_policy(const std::string& arg) {
  if (!std::filesystem::is_regular_file(arg)) {
    const PolicyConfig cfg = preset(arg);
    return {cfg, json{{"schema", 1}, {"preset", arg}}};
  }
  const auto bytes = read_file(arg);
  json j = json::parse(bytes.begin(), bytes.end(), nullptr, false);
  if (j.is_discarded()) bad(arg + ": malformed JSON");
  return policy_from_json(j);
}

json to_json(const PolicyConfig& cfg) {
  json j{{"schema", 1}, {"groups", cfg.groups}, {"N", cfg.n}, {"prob", cfg.prob}};
  if (cfg.fixed_mag)
    j["mag"] = cfg.fixed_mag->level();
  else
    j["mag"] = "random";
  return j;
}

}  // namespace textaug::cli
