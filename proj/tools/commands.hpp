// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Exit statuses:
//   0 success
//   1 batch finished but some files failed, or a replay did not match
//   2 I/O or codec failure
//   3 unknown op
//   4 invalid arguments (bad magnitude, prob, policy, empty input dir, ...)

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "manifest.hpp"

namespace textaug::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPartial = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitUnknownOp = 3;
inline constexpr int kExitInvalid = 4;

/// Environment variable consulted when --seed is absent.
inline constexpr const char* kSeedEnv = "TEXTAUG_SEED";

class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

struct ApplyOptions {
  std::string op;
  int mag = 0;
  double prob = 1.0;
  std::uint64_t seed = 0;
  std::filesystem::path input;
  std::filesystem::path output;
};

/// Returns the number of RNG draws consumed.
std::uint64_t cmd_apply(const ApplyOptions& opts);

struct BatchOptions {
  std::string policy;  // preset name or policy file; ignored when replaying
  std::filesystem::path input_dir;
  std::filesystem::path output_dir;
  std::uint64_t seed = 0;  // ignored when replaying
  int workers = 1;
  std::optional<std::filesystem::path> replay;
};

struct BatchResult {
  Manifest manifest;
  std::string manifest_sha256;
  int failures = 0;
  int mismatches = 0;  // replay only
};

/// PNG/JPEG files under input_dir (recursive, sorted by relative path) are
/// augmented into output_dir as PNG; manifest.json is written there too.
/// With `replay`, seed and policy come from that manifest and every output
/// hash is compared against it.
BatchResult cmd_batch(const BatchOptions& opts);

void cmd_list(bool json, std::ostream& out);

void cmd_preview(const std::filesystem::path& input, const std::filesystem::path& output, std::uint64_t seed);

/// Maps any exception escaping a command to its exit status and prints it.
int exit_code_for(std::exception_ptr e, std::ostream& err);

int run_cli(int argc, char** argv);

}  // namespace textaug::cli
