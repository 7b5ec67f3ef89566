// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

int main(int argc, char** argv) { return textaug::cli::run_cli(argc, argv); }
