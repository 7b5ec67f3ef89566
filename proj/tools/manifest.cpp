// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include "manifest.hpp"

#include <openssl/evp.h>

#include <stdexcept>

#include "textaug/error.hpp"

namespace textaug::cli {

using nlohmann::json;

json to_json(const Manifest& m) {
  json files = json::array();
  for (const auto& f : m.files) {
    json trace = json::array();
    for (const auto& t : f.trace) trace.push_back({{"op", t.op}, {"mag", t.mag}, {"applied", t.applied}});
    json entry{{"input", f.input},   {"output", f.output}, {"child_seed", f.child_seed},
               {"status", f.status}, {"trace", trace},     {"sha256", f.sha256}};
    if (!f.error.empty()) entry["error"] = f.error;
    files.push_back(std::move(entry));
  }
  return {{"schema", 1}, {"seed", m.seed}, {"policy", m.policy}, {"files", files}};
}

Manifest manifest_from_json(const json& j) {
  try {
    if (j.at("schema") != 1) throw Error(ErrorCode::kInvalidPolicy, "unsupported manifest schema");
    Manifest m;
    m.seed = j.at("seed").get<std::uint64_t>();
    m.policy = j.at("policy");
    for (const auto& e : j.at("files")) {
      FileRecord f;
      f.input = e.at("input").get<std::string>();
      f.output = e.at("output").get<std::string>();
      f.child_seed = e.at("child_seed").get<std::uint64_t>();
      f.status = e.at("status").get<std::string>();
      f.error = e.value("error", "");
      f.sha256 = e.at("sha256").get<std::string>();
      for (const auto& t : e.at("trace"))
        f.trace.push_back({t.at("op").get<std::string>(), t.at("mag").get<int>(), t.at("applied").get<bool>()});
      m.files.push_back(std::move(f));
    }
    return m;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidPolicy, std::string("malformed manifest: ") + e.what());
  }
}

std::string serialize(const Manifest& m) { return to_json(m).dump(2) + "\n"; }

std::string sha256_hex(std::span<const std::uint8_t> bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 15]);
  }
  return out;
}

std::string sha256_hex(const std::string& text) {
  return sha256_hex(std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

}  // namespace textaug::cli
