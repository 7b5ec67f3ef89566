// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Batch manifest. Only run-invariant data goes in (no worker count, no
// timestamps, relative paths), so identical runs serialize identically.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "textaug/policy.hpp"

namespace textaug::cli {

struct FileRecord {
  std::string input;   // relative to the input directory
  std::string output;  // relative to the output directory
  std::uint64_t child_seed = 0;
  std::string status = "ok";  // "ok" or "error"
  std::string error;
  std::vector<TraceEntry> trace;
  std::string sha256;  // of the written PNG
};

struct Manifest {
  std::uint64_t seed = 0;
  nlohmann::json policy;
  std::vector<FileRecord> files;
};

nlohmann::json to_json(const Manifest& m);
/// Throws Error(kInvalidPolicy) on schema violations.
Manifest manifest_from_json(const nlohmann::json& j);

/// Canonical text: two-space indented JSON plus a trailing newline.
std::string serialize(const Manifest& m);

std::string sha256_hex(std::span<const std::uint8_t> bytes);
std::string sha256_hex(const std::string& text);

}  // namespace textaug::cli
