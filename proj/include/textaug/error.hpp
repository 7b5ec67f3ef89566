// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace textaug {

enum class ErrorCode {
  kUnknownOp,
  kInvalidImage,
  kInvalidProb,
  kInvalidMagnitude,
  kDegenerateConfiguration,
  kInvalidRadius,
  kImageTooSmall,
  kInvalidPolicy,
  kUnknownPreset,
  kCodecFailure,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace textaug
