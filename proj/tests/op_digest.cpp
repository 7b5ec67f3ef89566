// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

// Prints one FNV-1a digest per (op, magnitude, channels) so runs under
// different kernel variants can be diffed.

#include <cstdio>

#include "textaug/simd/kernels.hpp"
#include "textaug/textaug.hpp"

int main() {
  using namespace textaug;
  std::printf("kernels %s\n", simd::active_kernels().name);
  for (int channels : {1, 3}) {
    Image img(100, 32, channels);
    Rng fill(99);
    for (auto& v : img.data()) v = static_cast<std::uint8_t>(fill.integer(0, 255));
    for (const auto& op : registry_list()) {
      for (int mag = 0; mag < 3; ++mag) {
        Rng rng(1234 + mag);
        const Image out = apply(op.name, img, Magnitude(mag), 1.0, rng);
        const auto bytes = out.data();
        std::printf("%.*s %d %d %016llx\n", static_cast<int>(op.name.size()), op.name.data(), mag, channels,
                    static_cast<unsigned long long>(fnv1a64(bytes.data(), bytes.size())));
      }
    }
  }
  return 0;
}
